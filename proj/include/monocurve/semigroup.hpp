#ifndef MONOCURVE_SEMIGROUP_HPP
#define MONOCURVE_SEMIGROUP_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

// A numerical semigroup given by its minimal generating set n0 < n1 < ... < nc
// with gcd 1.  Instances are immutable; the Apery table with respect to n0 is
// precomputed so membership queries are O(1).
class NumericalSemigroup {
  public:
    // Minimal generators in strictly increasing order.
    const std::vector<std::int64_t>& generators() const { return gens_; }
    std::int64_t multiplicity() const { return gens_.front(); }
    int embedding_dimension() const { return static_cast<int>(gens_.size()); }
    // Codimension of the associated monomial curve: embdim - 1.
    int codim() const { return embedding_dimension() - 1; }

    bool contains(std::int64_t n) const;
    std::int64_t frobenius() const;

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
    bool operator<(const NumericalSemigroup& o) const { return gens_ < o.gens_; }

  private:
    explicit NumericalSemigroup(std::vector<std::int64_t> minimal_gens);
    std::vector<std::int64_t> gens_;
    std::vector<std::int64_t> apery_; // apery_[r] = least element congruent to r mod n0

    friend NumericalSemigroup canonicalize(const std::vector<std::int64_t>& raw);
};

// Sorts, deduplicates and minimalizes a raw generating set.
// Throws EmptyInputError on an empty set and NotNumericalError when gcd != 1.
NumericalSemigroup canonicalize(const std::vector<std::int64_t>& raw);

// Least element of S in each residue class mod m, indexed by residue.
// Throws NotInSemigroupError unless m is a nonzero element of S.
std::vector<std::int64_t> apery_set(const NumericalSemigroup& s, std::int64_t m);

// Streams every numerical semigroup with the given embedding dimension whose
// minimal generators are all <= max_generator, in lexicographic order of the
// generator tuple.
void enumerate_semigroups(int embdim, std::int64_t max_generator,
                          const std::function<void(const NumericalSemigroup&)>& yield);

// Convenience form collecting the stream.
std::vector<NumericalSemigroup> enumerate_semigroups(int embdim, std::int64_t max_generator);

} // namespace monocurve

#endif
