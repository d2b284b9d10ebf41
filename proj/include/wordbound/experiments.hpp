// Reproducible experiments on word length. Each returns an ExperimentReport
// whose verdicts refer to ids in claim_catalog(). Lengths always come from
// the breadth-first search in metric.hpp; closed-form values appear only as
// comparison columns.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wordbound/genset.hpp"
#include "wordbound/metric.hpp"
#include "wordbound/report.hpp"

namespace wordbound {

using IntPair = std::pair<std::int64_t, std::int64_t>;

bool is_prime(std::int64_t n);

/// Z x Z/q with S = {±(p,1), ±(q+1,0)}; length of (0,1) per prime p.
ExperimentReport unbounded_witness_zxzq(std::int64_t q, std::vector<std::int64_t> const& primes,
                                        SearchOptions const& options = {});

/// Z^d with S = {±(p,a,0..), ±(q,b,0..), ±e_3, .., ±e_d}, bp - aq = 1;
/// length of `x` per coprime pair.
ExperimentReport unbounded_witness_zd(std::size_t d, Element const& x,
                                      std::vector<IntPair> const& pairs,
                                      SearchOptions const& options = {});

/// Heisenberg group with S = {a^±p, a^±q, b^±1}; length of c^n per pair,
/// plus the standard-generator control l(c) = 4.
ExperimentReport unbounded_witness_heisenberg(std::int64_t n, std::vector<IntPair> const& pairs,
                                              SearchOptions const& options = {});

/// Infinite dihedral group with S = {s, t^α s, t^β s}; length of t per pair.
ExperimentReport unbounded_witness_dinfty(std::vector<IntPair> const& pairs,
                                          SearchOptions const& options = {});

/// The exponent e with [x,y] = c^e. Throws PreconditionError unless
/// {x^±1, y^±1} generates the Heisenberg group.
std::int64_t heisenberg_center_certificate(Element const& x, Element const& y);

/// Seeded generating pairs (random unimodular abelian part, random central
/// part); checks [x,y] = c^±1 and l_S(c) <= 4 by search with cap 4.
ExperimentReport heisenberg_center_experiment(std::size_t samples, std::uint64_t seed,
                                              SearchOptions const& options = {});

/// Rejection-sampled generating sets of Z x D8 drawn from elements with
/// |Z-part| <= radius; checks l_S((0,r^2)) <= 4 for each.
ExperimentReport bound_witness_zxd8(std::size_t samples, std::uint64_t seed, std::int64_t radius,
                                    SearchOptions const& options = {});

struct PrescribedLength {
  GenSet                genset;
  std::int64_t          p = 0;
  GenerationCertificate generation;
  LengthCert            length;
};

/// E = {g^±2, g^±p} ∪ {x_i^±u, x_i^±v} in F_k with p = 2l+1. Requires g
/// nontrivial, u < v primes, u > p and v > 3Nu where N is the largest
/// syllable exponent of g. Searches up to l+2.
PrescribedLength prescribe_length_free(std::size_t k, Element const& g, std::int64_t l,
                                       std::int64_t u, std::int64_t v,
                                       SearchOptions const& options = {});

/// E = {±2g, ±pg} ∪ {±u e_i, ±v e_i} in Z^d with p = 2l+1; N is the largest
/// absolute coordinate of g.
PrescribedLength prescribe_length_zd(std::size_t d, Element const& g, std::int64_t l,
                                     std::int64_t u, std::int64_t v,
                                     SearchOptions const& options = {});

using PrescribeTriple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;  // (l, u, v)

std::vector<PrescribeTriple> const& default_prescribe_grid();

ExperimentReport prescribe_free_experiment(std::size_t k, Element const& g,
                                           std::vector<PrescribeTriple> const& grid,
                                           SearchOptions const& options = {});
ExperimentReport prescribe_zd_experiment(std::size_t d, Element const& g,
                                         std::vector<PrescribeTriple> const& grid,
                                         SearchOptions const& options = {});

/// D_2p as the image of the infinite dihedral group mod t^p; validates each
/// F_k: r^m s^e -> r^(km) s^e exhaustively and collects the orbit of r.
/// The orbit bound is asserted only when ks covers every unit mod p.
ExperimentReport quotient_orbit_experiment(std::int64_t p, std::vector<std::int64_t> const& ks);

/// One row per element of a finite group: exact uniform length, the first
/// maximizing generating set, and the number of generating sets.
ExperimentReport uniform_length_experiment(Group const& g);

/// Orbit bound check for every element of each group.
ExperimentReport aut_orbit_experiment(std::vector<Group> const& groups);

/// Conjugacy counts for a and c in the Heisenberg group.
ExperimentReport conjugacy_experiment(std::size_t radius, SearchOptions const& options = {});

}  // namespace wordbound
