#pragma once

#include "symsum/exceptional.hpp"
#include "symsum/manifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symsum {

enum class KnefVerdict { knef, not_knef, ruled_section_exception };
enum class KnefCase {
    BPlusGreaterOne,
    IrrationalRuled,
    S2xS2Case,
    RationalSurface,
    BPlusOneGeneral,
};

const char* knef_verdict_name(KnefVerdict v);
const char* knef_case_name(KnefCase c);

struct KnefCheck {
    std::string description;
    std::string values;
    bool pass = false;
};

/// Machine-checkable trace of a K-nef certification: which case applied,
/// which inequalities were verified with which values, and which trusted
/// model flags were consumed.  verdict == knef only if every check passed.
struct KnefCertificate {
    KnefVerdict verdict = KnefVerdict::not_knef;
    KnefCase knef_case = KnefCase::RationalSurface;
    std::vector<KnefCheck> checks;
    std::vector<std::string> assumptions_consumed;
    std::optional<HomologyClass> witness; // for not_knef: the missed exceptional class
    i64 degree_bound = 0;
    bool exceptional_set_complete = false;
    std::string notes;
};

/// Certify that the embedded symplectic surface F (positive genus) is
/// rationally K-nef, i.e. <K + PD[F], A> >= 0 for every class A represented
/// by a simple pseudoholomorphic sphere, by the five-case analysis:
///   - b+ > 1 (trusted Seiberg-Witten input),
///   - blowups of irrational ruled surfaces (cone of fiber components),
///   - S^2 x S^2 (positivity against both rulings),
///   - rational surfaces (lambda = K + F into the light cone via the
///     positive-square lemma),
///   - b+ = 1 with minimal model neither rational nor ruled (trusted input).
/// The homological-section configurations of minimal ruled models return
/// ruled_section_exception; a surface missing an exceptional class returns
/// not_knef with the witness.
KnefCertificate is_rationally_knef(const ManifoldModel& m, const SurfaceInModel& F,
                                   i64 degree_bound, int jobs = 1);

struct PossquareResult {
    bool hypotheses_ok = false;
    bool holds = false;
    std::vector<KnefCheck> checks;
    std::string derivation; // the n = 1 integer argument, when taken
};

/// The positive-square lemma for lambda in a rational model: if
/// lambda^2 >= K.lambda, <lambda, H> >= 0 and <lambda, E> >= 0 for every
/// exceptional class E, then lambda^2 >= 0.  n = 0 is definite, n = 1 runs
/// the integer argument (b = a + k forces k <= 0), n >= 2 verifies the
/// conclusion numerically on the lemma's authority; a negative square there
/// is a hard internal error naming whether the exceptional set was complete
/// (which would falsify the lemma) or bounded (incomplete input).
PossquareResult lemma_possquare(const ManifoldModel& m, const HomologyClass& lambda,
                                const ExceptionalSet& e_set);

struct OracleResult {
    bool violation = false;
    std::optional<HomologyClass> witness;
    i64 value = 0; // <K + F, witness>
    i64 coeff_bound = 0;
    unsigned long long classes_checked = 0;
};

/// Independent brute-force check of the K-nef condition: enumerate every
/// integral A with coefficients in [-coeff_bound, coeff_bound], A^2 >= 0,
/// <K, A> < 0 and positive omega-area, and report the lexicographically
/// first A with <K + PD[F], A> < 0, if any.  Assumes the (-1)-sphere part
/// of the condition was already checked via meets_all_exceptional.
OracleResult knef_oracle(const ManifoldModel& m, const SurfaceInModel& F, i64 coeff_bound,
                         int jobs = 1);

} // namespace symsum
