#include "slicekit/gridcache.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <vector>

namespace slicekit {

static_assert(std::endian::native == std::endian::little,
              "grid cache assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'S', 'L', 'K', 'G', 'R', 'I', 'D', '1'};

struct Header {
    char magic[8];
    std::uint32_t ambientDim;
    std::uint32_t intrinsicDim;
    std::uint32_t level;
    std::uint32_t scheme;
    std::uint64_t seed;
    std::uint64_t count;
};

} // namespace

std::string grid_cache_dir() {
    const char* dir = std::getenv("SLICEKIT_CACHE_DIR");
    return dir ? std::string(dir) : std::string();
}

std::string grid_cache_filename(int n, int level, Scheme scheme, std::uint64_t seed) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "sphere_n%d_l%d_%s_s%llu.grid", n, level,
                  scheme_name(scheme).c_str(), static_cast<unsigned long long>(seed));
    return buf;
}

std::optional<SphereGrid> load_cached_grid(int n, int level, Scheme scheme, std::uint64_t seed) {
    const std::string dir = grid_cache_dir();
    if (dir.empty()) return std::nullopt;
    const std::string path =
        (std::filesystem::path(dir) / grid_cache_filename(n, level, scheme, seed)).string();

    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;

    Header h{};
    if (std::fread(&h, sizeof h, 1, f) != 1 || std::memcmp(h.magic, kMagic, 8) != 0 ||
        h.ambientDim != static_cast<std::uint32_t>(n) ||
        h.level != static_cast<std::uint32_t>(level) ||
        h.scheme != static_cast<std::uint32_t>(scheme) || h.seed != seed) {
        std::fclose(f);
        return std::nullopt;
    }

    SphereGrid g;
    g.ambientDim = n;
    g.intrinsicDim = static_cast<int>(h.intrinsicDim);
    g.level = level;
    g.scheme = scheme;
    g.seed = seed;
    g.nodes.resize(h.count * h.ambientDim);
    g.weights.resize(h.count);

    std::vector<double> record(h.ambientDim + 1);
    for (std::uint64_t i = 0; i < h.count; ++i) {
        if (std::fread(record.data(), sizeof(double), record.size(), f) != record.size()) {
            std::fclose(f);
            return std::nullopt;
        }
        std::memcpy(g.nodes.data() + i * h.ambientDim, record.data(),
                    h.ambientDim * sizeof(double));
        g.weights[i] = record[h.ambientDim];
    }
    std::fclose(f);
    return g;
}

void store_cached_grid(const SphereGrid& grid) {
    const std::string dir = grid_cache_dir();
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;

    const std::string path =
        (std::filesystem::path(dir) /
         grid_cache_filename(grid.ambientDim, grid.level, grid.scheme, grid.seed))
            .string();
    const std::string tmp = path + ".tmp";

    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) return;

    Header h{};
    std::memcpy(h.magic, kMagic, 8);
    h.ambientDim = static_cast<std::uint32_t>(grid.ambientDim);
    h.intrinsicDim = static_cast<std::uint32_t>(grid.intrinsicDim);
    h.level = static_cast<std::uint32_t>(grid.level);
    h.scheme = static_cast<std::uint32_t>(grid.scheme);
    h.seed = grid.seed;
    h.count = grid.size();

    bool ok = std::fwrite(&h, sizeof h, 1, f) == 1;
    std::vector<double> record(grid.ambientDim + 1);
    for (std::uint64_t i = 0; ok && i < h.count; ++i) {
        std::memcpy(record.data(), grid.nodes.data() + i * h.ambientDim,
                    h.ambientDim * sizeof(double));
        record[grid.ambientDim] = grid.weights[i];
        ok = std::fwrite(record.data(), sizeof(double), record.size(), f) == record.size();
    }
    std::fclose(f);
    if (ok)
        std::filesystem::rename(tmp, path, ec);
    else
        std::filesystem::remove(tmp, ec);
}

} // namespace slicekit
