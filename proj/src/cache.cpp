#include "cmkit/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "cmkit/common.hpp"
#include "cmkit/ring.hpp"
#include "cmkit/version.hpp"

namespace cmkit {

namespace fs = std::filesystem;

// Entries are addressed by sha256(version | key) so a version bump
// invalidates every old entry.
static std::string entry_name(const std::string& key) {
    return sha256_hex(std::string(CMKIT_VERSION) + "|" + key) + ".blob";
}

CacheStats& cache_stats() {
    static CacheStats s;
    return s;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::logic_error("internal error: SHA-256 digest failed");
    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

void install_file_cache(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir)) {
        std::fprintf(stderr, "warning: cache directory %s unusable; caching disabled\n",
                     dir.c_str());
        return;
    }

    cache_hooks().get = [dir](const std::string& key) -> std::optional<std::string> {
        fs::path p = fs::path(dir) / entry_name(key);
        std::ifstream in(p, std::ios::binary);
        if (!in) {
            ++cache_stats().misses;
            return std::nullopt;
        }
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (in.bad()) {
            ++cache_stats().misses;
            return std::nullopt;
        }
        ++cache_stats().hits;
        return data;
    };

    cache_hooks().put = [dir](const std::string& key, const std::string& blob) {
        // Write-then-rename keeps readers from ever seeing a partial entry.
        fs::path final_path = fs::path(dir) / entry_name(key);
        fs::path tmp = final_path;
        tmp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) return;  // cache is best-effort
            out << blob;
            if (!out.good()) {
                out.close();
                std::error_code ec2;
                fs::remove(tmp, ec2);
                return;
            }
        }
        std::error_code ec2;
        fs::rename(tmp, final_path, ec2);
        if (ec2) {
            fs::remove(tmp, ec2);
            return;
        }
        ++cache_stats().puts;
    };
}

void install_file_cache() {
    const char* dir = std::getenv("CMKIT_CACHE");
    if (dir && *dir) install_file_cache(dir);
}

}  // namespace cmkit
