#pragma once

#include "visev/binary_form.hpp"
#include "visev/hilbert.hpp"

namespace visev {

using Partition = std::vector<int>;  // weakly decreasing, positive entries

std::string partition_to_string(const Partition& p);
Partition parse_partition(const std::string& s);

struct MRLIdeal {
    Partition lambda;
    int d = 0;
    Ideal ideal;                 // in Q[c0..cd]
    std::map<int, int> profile;  // minimal generator degrees
    bool profile_validated = false;   // against the tabulated reference
    bool profile_mismatch = false;    // tabulated value exists and differs
};

// Reference generator profiles for the event partitions (and (2,2)) in the
// tabulated range; empty optional when not tabulated.
std::optional<std::map<int, int>> reference_profile(const Partition& lambda, int d);

// The multiple-root-locus ideal: closure of degree-d forms c0 t^d + ... + cd
// with root multiplicities lambda. Computed by the subresultant recursion and
// saturations; results are memoized per process and optionally disk-cached.
MRLIdeal mrl_ideal(const Partition& lambda, int d, const EngineOpts& opts = {});

RingPtr coefficient_ring(int d, const std::string& prefix = "c");

// Substitute concrete coefficient polynomials (c0..cd images) into the ideal.
std::vector<Polynomial> substitute_mrl(const MRLIdeal& mrl, const std::vector<Polynomial>& coeffs);

}  // namespace visev
