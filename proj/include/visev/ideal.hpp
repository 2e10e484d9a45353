#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "visev/polynomial.hpp"

namespace visev {

struct HilbertData {
    int dimension = -1;   // projective dimension; -1 = empty projective set
    Int degree = 0;
    std::vector<Int> series_numerator;  // numerator of the Hilbert series over (1-t)^n
};

class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit() const;

    // Cached per (ring-key, order) reduced basis; thread-safe.
    std::optional<std::vector<Polynomial>> cached_basis(const MonomialOrder& ord) const;
    void store_basis(const MonomialOrder& ord, std::vector<Polynomial> basis) const;
    std::optional<HilbertData> cached_hilbert() const;
    void store_hilbert(HilbertData h) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Polynomial>> bases;
        std::optional<HilbertData> hilbert;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct RingMorphism {
    RingPtr source;
    RingPtr target;
    std::vector<Polynomial> images;  // one per source variable, in target ring
};

}  // namespace visev
