#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rbs/boson.h"
#include "rbs/cuntz.h"
#include "rbs/report.h"
#include "rbs/words.h"

namespace rbs {

enum class BosonClass { Fock, Fj, F12, F21, GeneralPeriodic };

struct Classification {
  BosonClass kind = BosonClass::GeneralPeriodic;
  /// j of F_j (1 for Fock).
  Letter j = 0;
  Word pattern;

  /// `Fock`, `F_3`, `F_12`, `F_21` or `GeneralPeriodic(1,1,2)`.
  std::string to_string() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// One evaluated defining identity: the exact scalar is <Omega, lhs> for
/// eigen-identities and |lhs|^2 for identities of the form lhs = 0.
struct VerifiedIdentity {
  std::string identity;
  RadicalScalar scalar;
  bool passed = false;
};

/// Boson-cyclic component of a restricted P_inf(cycle): the labels
/// tail-equivalent to vacuum = rotation^inf.
struct ComponentReport {
  RepSpec ambient;
  EPWord vacuum;
  /// Vacuum letters over one period; a_n a_n^* Omega = pattern[n] Omega.
  Word pattern;
  Classification classification;
  std::vector<VerifiedIdentity> verified;
};

/// One component per rotation of the (primitive) cycle; unclassified.
std::vector<ComponentReport> enumerate_components(const RepSpec& spec);

/// Classifies by pattern and evaluates the class's defining identities on the
/// vacuum for modes up to max(max_mode, 2 * period), appending them to
/// component.verified. Throws std::logic_error if any identity is false.
Classification classify_component(ComponentReport& component, Mode max_mode = 6);

/// enumerate_components followed by classify_component.
std::vector<ComponentReport> branch(const RepSpec& spec, Mode max_mode = 6);

struct CyclicityWitness {
  /// Normal-ordered, creators and annihilators on disjoint modes, coefficient 1.
  BosonMonomial monomial;
  /// apply_boson(monomial, vacuum) = lambda |target>.
  RadicalScalar lambda;
};
CyclicityWitness cyclicity_witness(const ComponentReport& component, const EPWord& target);

/// Every basis label of `spec` of the form s_p Omega with |p| <= max_prefix
/// and letters of p <= max_letter, sorted.
std::vector<EPWord> enumerate_labels(const RepSpec& spec, std::size_t max_prefix, Letter max_letter);
/// Canonical labels of P_inf(j) with prefix length <= bound and prefix letters <= bound.
std::vector<EPWord> basis_lambda_j(Letter j, std::size_t bound);
/// Multi-indices of the orthonormal basis {s_J Omega : J in Lambda_j} within the
/// same bound: (m) for m <= bound, and J.(n) with n != j of length <= bound.
std::vector<Word> lambda_j_indices(Letter j, std::size_t bound);

struct NormalizedMonomial {
  BosonMonomial monomial;
  RadicalScalar normalizer;
};
/// C (a*)^k ... a^l ... for F_j with k <= max_exponent on creator modes and
/// l <= min(j - 1, max_exponent) on disjoint annihilator modes, modes <= max_mode.
std::vector<NormalizedMonomial> basis_typej(Letter j, Mode max_mode, std::uint32_t max_exponent);
/// F_12 family: odd-mode creators, even-mode creators, single even-mode
/// annihilators on modes disjoint from the even creators. With swapped = true
/// the parities are exchanged (F_21 family).
std::vector<NormalizedMonomial> basis_onetwov(Mode max_mode, std::uint32_t max_exponent, bool swapped = false);

/// Labels tail-equivalent to `vacuum` that differ from it only at positions
/// <= max_mode, each by at most max_exponent (and stay >= 1).
std::vector<EPWord> component_labels_at_cutoff(const EPWord& vacuum, Mode max_mode, std::uint32_t max_exponent);

/// Pairwise <v_a, v_b> = delta_ab for v = C x vacuum, and the labels reached
/// equal component_labels_at_cutoff.
Report check_basis_family(const std::string& name, std::span<const NormalizedMonomial> family, const EPWord& vacuum,
                          Mode max_mode, std::uint32_t max_exponent);
/// Pairwise orthonormality of s_J Omega for J in lambda_j_indices, and the
/// labels reached equal basis_lambda_j.
Report check_lambda_basis(Letter j, std::size_t bound);
/// <Omega | a_n^k Omega> = <Omega | (a_n*)^k Omega> = 0 in F_j.
Report check_vacuum_orthogonality(Letter j, Mode max_mode, std::uint32_t max_power);
/// Every label from enumerate_labels is tail-equivalent to exactly one component vacuum.
Report check_partition(const RepSpec& spec, std::size_t max_prefix, Letter max_letter);
/// Every label from enumerate_labels is reached from its component's vacuum
/// by cyclicity_witness with nonzero lambda.
Report check_cyclicity(const RepSpec& spec, std::size_t max_prefix, Letter max_letter);
/// In P_inf(12): s_J Omega = C a^{*(J-1)} a_2 a_4 ... a_{2m} Omega for |J| = 2m and
/// C a^{*(J-1)} a_1 a_3 ... a_{2m-1} Omega' for |J| = 2m - 1, Omega' = s_2 Omega.
Report check_two_cycle_density(std::size_t max_length, Letter max_letter);

/// Structural witness (vacua not tail-equivalent, or distinct a_n a_n^*
/// eigenvalue lists) plus, when both components live in the same ambient
/// representation, <x Omega_1, Omega_2> = 0 for `samples` seeded random
/// normal-ordered monomials x.
Report inequivalence_witness(const ComponentReport& first, const ComponentReport& second, std::size_t samples,
                             std::uint64_t seed, Mode max_mode = 6, std::uint32_t max_exponent = 4);

/// a_n a_n^* eigenvalues on the vacuum for n = 1..count, evaluated through the boson action.
std::vector<RadicalScalar> number_eigenvalues(const EPWord& vacuum, Mode count);

}  // namespace rbs
