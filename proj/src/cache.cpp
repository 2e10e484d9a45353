#include "visev/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "visev/parser.hpp"

namespace visev {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {
const char* kVersion = "1";
std::string g_override_dir;

std::string canonical_payload(const MRLIdeal& e) {
    std::string s = "lambda=" + partition_to_string(e.lambda) + ";d=" + std::to_string(e.d) + ";";
    for (const auto& g : e.ideal.gens()) s += g.to_string() + ";";
    return s;
}
}  // namespace

std::string mrl_cache_dir() {
    if (!g_override_dir.empty()) return g_override_dir;
    if (const char* env = std::getenv("VISEV_CACHE_DIR")) return env;
    return ".visev-cache";
}

void set_mrl_cache_dir(const std::string& dir) { g_override_dir = dir; }

std::string mrl_cache_key(const Partition& lambda, int d) {
    std::string k = "mrl_";
    for (size_t i = 0; i < lambda.size(); ++i) k += (i ? "_" : "") + std::to_string(lambda[i]);
    k += "_d" + std::to_string(d) + "_v" + kVersion;
    return k;
}

std::optional<MRLIdeal> mrl_cache_get(const Partition& lambda, int d) {
    fs::path path = fs::path(mrl_cache_dir()) / (mrl_cache_key(lambda, d) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        MRLIdeal e;
        e.lambda = lambda;
        e.d = d;
        RingPtr c = coefficient_ring(d);
        std::vector<Polynomial> gens;
        for (const auto& g : j.at("generators")) gens.push_back(parse_polynomial(g, c));
        e.ideal = Ideal(c, std::move(gens));
        for (const auto& [k, v] : j.at("profile").items()) e.profile[std::stoi(k)] = v;
        e.profile_validated = j.value("profile_validated", false);
        e.profile_mismatch = j.value("profile_mismatch", false);
        uint64_t sum = j.at("checksum");
        if (sum != fnv1a64(canonical_payload(e))) throw Error("checksum mismatch");
        return e;
    } catch (const std::exception&) {
        // quarantine and force a recompute
        std::error_code ec;
        fs::rename(path, path.string() + ".quarantine", ec);
        return std::nullopt;
    }
}

void mrl_cache_put(const MRLIdeal& e) {
    fs::path dir(mrl_cache_dir());
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;  // cache is best-effort
    json j;
    j["lambda"] = partition_to_string(e.lambda);
    j["d"] = e.d;
    j["version"] = kVersion;
    std::vector<std::string> gens;
    for (const auto& g : e.ideal.gens()) gens.push_back(g.to_string());
    j["generators"] = gens;
    json prof = json::object();
    for (const auto& [deg, count] : e.profile) prof[std::to_string(deg)] = count;
    j["profile"] = prof;
    j["profile_validated"] = e.profile_validated;
    j["profile_mismatch"] = e.profile_mismatch;
    j["checksum"] = fnv1a64(canonical_payload(e));

    fs::path path = dir / (mrl_cache_key(e.lambda, e.d) + ".json");
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump(1) << "\n";
    }
    fs::rename(tmp, path, ec);
}

CacheVerify mrl_cache_verify(const Partition& lambda, int d) {
    CacheVerify v;
    auto e = mrl_cache_get(lambda, d);
    if (!e) return v;
    v.present = true;
    v.checksum_ok = true;  // get() would have quarantined otherwise
    v.profile = e->profile;
    if (auto ref = reference_profile(lambda, d)) {
        v.profile_tabulated = true;
        v.profile_ok = (*ref == e->profile);
    }
    return v;
}

}  // namespace visev
