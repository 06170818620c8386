#pragma once
#include <optional>
#include <vector>

#include "concord/dinv.hpp"
#include "concord/knot.hpp"

namespace concord {

// The prime-primary part of H_1 of the branched double cover of n copies of
// the family: n surgery summands S^3_k(K#K^r) (from the (2,k)-cables, sign
// cable_sign) and n lens summands L(k,1) (from the torus summands, opposite
// sign). Generators interleave as [alpha_1, beta_1, ..., alpha_n, beta_n];
// the linking form is diagonal with lambda(alpha,alpha) = cable_sign/k,
// lambda(beta,beta) = -cable_sign/k.
struct CoverDescription {
    int k = 0;
    int n = 0;
    int cable_sign = 1;
    KnotPtr core; // companion knot K of the cables (unknot allowed)

    int slots() const { return 2 * n; }
    int form_sign(int pos) const { return pos % 2 == 0 ? cable_sign : -cable_sign; }
};

struct Metabolizer {
    std::vector<std::vector<int>> basis; // reduced row-echelon rows over F_k, 2n columns
};

struct Certificate {
    std::vector<int> element;
    Rat dbar;
};

struct MetabolizerReport {
    Metabolizer m;
    std::optional<Certificate> cert; // first nonzero-dbar element in coefficient-lex order
    bool meets_diagonal = false;     // contains a nonzero element of <alpha_i + beta_i>
};

struct Verdict {
    int prime = 0;
    int n = 0;
    bool exhaustive = true;
    bool obstructed = false;
    std::vector<MetabolizerReport> reports;
    int threshold_2m_plus_1 = 0; // 2 m(K) + 1, to compare against k
    double seconds = 0;          // wall time; text output only, never serialized
};

// Pattern-match J against the supported family and extract the prime-primary
// part with n copies. Summands whose k differs from `prime` are dropped.
CoverDescription build_cover(const KnotPtr& J, int prime, int n);

// d-bar tables per summand slot, in cover order.
std::vector<DTable> cover_tables(const CoverDescription& cover);

// All n-dimensional totally isotropic subspaces of (F_k)^{2n}, echelon bases
// in lexicographic order (pivot columns, then free entries). Exact for
// n <= limit; beyond that refuses unless sample_budget > 0, in which case a
// non-exhaustive random sample is produced (marked by the caller).
std::vector<Metabolizer> enumerate_metabolizers(const CoverDescription& cover, int limit = 2,
                                                int sample_budget = 0, unsigned seed = 1);

// Additivity over summands; asserts the value is unchanged under the
// conjugation relabeling i -> k-i of every slot.
Rat dbar_on_element(const CoverDescription& cover, const std::vector<DTable>& tables,
                    const std::vector<int>& element);

std::optional<Certificate> check_metabolizer(const CoverDescription& cover,
                                             const std::vector<DTable>& tables,
                                             const Metabolizer& m);

// Full per-prime verdict for n copies of the family J. Primes are processed
// independently; metabolizer scans run in parallel without affecting the
// reported certificates.
std::vector<Verdict> obstruct(const KnotPtr& J, int n, int limit = 2, int sample_budget = 0,
                              bool parallel = true);

struct GTildeReport {
    std::vector<bool> meets_diagonal;  // per metabolizer, in order
    std::vector<bool> has_certificate;
    bool disjunction_holds = true; // every metabolizer meets the diagonal or has a certificate
};

// Diagonal-intersection report. When k > 2m(K)+1 the disjunction is asserted
// (its failure would contradict the obstruction argument); below the
// threshold it is only reported.
GTildeReport gtilde_report(const CoverDescription& cover, const std::vector<DTable>& tables,
                           const std::vector<Metabolizer>& mets, int m_of_core);

} // namespace concord
