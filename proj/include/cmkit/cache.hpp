#pragma once

// Content-addressed file cache for expensive intermediate results (Groebner
// bases, resolution truncations).  Keys are canonical content strings; each
// entry lives at <dir>/<sha256(key)>.blob.  Consumers validate every blob
// they read, so a corrupted or stale entry only costs a recompute.

#include <optional>
#include <string>

namespace cmkit {

struct CacheStats {
    unsigned long hits = 0;
    unsigned long misses = 0;
    unsigned long puts = 0;
};

CacheStats& cache_stats();

std::string sha256_hex(const std::string& data);

// Install hooks backed by `dir` (created if absent).
void install_file_cache(const std::string& dir);

// Install from the CMKIT_CACHE environment variable; no-op when unset/empty.
void install_file_cache();

}  // namespace cmkit
