#pragma once

#include "visev/mrl.hpp"

namespace visev {

// On-disk cache of computed multiple-root-locus ideals. Directory comes from
// VISEV_CACHE_DIR (default ".visev-cache"); entries are JSON with an fnv1a64
// checksum over the canonical serialization. Writes are atomic
// (write-temp-then-rename); corrupted entries are quarantined, which triggers
// recomputation.
std::string mrl_cache_dir();
void set_mrl_cache_dir(const std::string& dir);  // overrides the env lookup

std::string mrl_cache_key(const Partition& lambda, int d);
std::optional<MRLIdeal> mrl_cache_get(const Partition& lambda, int d);
void mrl_cache_put(const MRLIdeal& entry);

struct CacheVerify {
    bool present = false;
    bool checksum_ok = false;
    bool profile_ok = false;        // against the tabulated reference (if any)
    bool profile_tabulated = false;
    std::map<int, int> profile;
};
CacheVerify mrl_cache_verify(const Partition& lambda, int d);

}  // namespace visev
