#include "symsum/report.hpp"

#include <sstream>

namespace symsum {

std::string render_class(const HomologyClass& c) { return c.str(); }

namespace {

json chern_json(const Chern& c) { return json{{"c1_sq", c.c1_sq}, {"c2", c.c2}}; }

json cert_checks_json(const KnefCertificate& cert) {
    json arr = json::array();
    for (const auto& c : cert.checks)
        arr.push_back({{"check", c.description}, {"values", c.values}, {"pass", c.pass}});
    return arr;
}

} // namespace

json invariants_json(const ParsedManifold& pm) {
    const auto& m = pm.model;
    json j;
    j["name"] = m.name;
    j["kind"] = kind_name(m.kind);
    if (m.kind == Kind::RuledTrivial || m.kind == Kind::RuledTwisted) j["h"] = m.h;
    if (m.kind != Kind::General) j["n"] = m.n;
    j["rank"] = m.lattice->rank;
    j["labels"] = m.lattice->labels;
    j["signature"] = {{"b_plus", m.lattice->b_plus}, {"b_minus", m.lattice->b_minus}};
    j["K"] = m.K.str();
    j["b1"] = m.b1;
    j["omega_ref"] = m.omega_ref.str();
    Chern c = chern_numbers(m);
    j["chern"] = chern_json(c);
    j["chern_asserted"] = m.asserted_chern.has_value();
    j["noether"] = noether_check(c.c1_sq, c.c2);
    j["flags"] = {{"minimal", m.flags.minimal},
                  {"minimal_model", minimal_model_kind_name(m.flags.minimal_model_kind)},
                  {"b_plus", m.flags.b_plus},
                  {"aspherical", m.flags.aspherical}};
    if (!m.note.empty()) j["note"] = m.note;
    json surfaces = json::array();
    for (const auto& s : pm.surfaces) {
        surfaces.push_back({{"name", s.name},
                            {"class", s.cls.str()},
                            {"square", square(s.cls)},
                            {"genus", s.genus},
                            {"omega_area", pairing(m.omega_ref, s.cls)}});
    }
    j["surfaces"] = surfaces;
    return j;
}

std::string invariants_text(const ParsedManifold& pm) {
    const auto& m = pm.model;
    std::ostringstream os;
    os << "manifold " << m.name << " (kind " << kind_name(m.kind);
    if (m.kind == Kind::RuledTrivial || m.kind == Kind::RuledTwisted) os << ", h = " << m.h;
    if (m.kind != Kind::General) os << ", n = " << m.n;
    os << ")\n";
    os << "  lattice: rank " << m.lattice->rank << ", signature (" << m.lattice->b_plus << ", "
       << m.lattice->b_minus << ")\n";
    os << "  K = " << m.K.str() << "\n";
    os << "  b1 = " << m.b1 << ", omega_ref = " << m.omega_ref.str() << "\n";
    Chern c = chern_numbers(m);
    os << "  chern: c1^2 = " << c.c1_sq << ", c2 = " << c.c2
       << (m.asserted_chern ? " (asserted)" : "") << ", noether "
       << (noether_check(c.c1_sq, c.c2) ? "ok" : "FAIL") << "\n";
    os << "  flags: minimal = " << (m.flags.minimal ? "true" : "false") << ", minimal_model = "
       << minimal_model_kind_name(m.flags.minimal_model_kind) << ", b+ = " << m.flags.b_plus
       << ", aspherical = " << (m.flags.aspherical ? "true" : "false") << "\n";
    if (!m.note.empty()) os << "  note: " << m.note << "\n";
    for (const auto& s : pm.surfaces)
        os << "  surface " << s.name << ": [" << s.cls.str() << "], square = " << square(s.cls)
           << ", genus = " << s.genus << ", omega-area = " << pairing(m.omega_ref, s.cls) << "\n";
    return os.str();
}

json knef_json(const KnefCertificate& cert, const OracleResult* oracle, bool agree) {
    json j;
    j["verdict"] = knef_verdict_name(cert.verdict);
    j["case"] = knef_case_name(cert.knef_case);
    j["checks"] = cert_checks_json(cert);
    j["assumptions_consumed"] = cert.assumptions_consumed;
    j["degree_bound"] = cert.degree_bound;
    j["exceptional_set_complete"] = cert.exceptional_set_complete;
    if (cert.witness) j["witness"] = cert.witness->str();
    if (!cert.notes.empty()) j["notes"] = cert.notes;
    if (oracle) {
        j["oracle"] = {{"coeff_bound", oracle->coeff_bound},
                       {"violation", oracle->violation}};
        if (oracle->witness) {
            j["oracle"]["witness"] = oracle->witness->str();
            j["oracle"]["value"] = oracle->value;
        }
        j["oracle_agrees"] = agree;
    }
    return j;
}

std::string knef_text(const KnefCertificate& cert, const OracleResult* oracle, bool agree) {
    std::ostringstream os;
    os << "K-nef certificate: " << knef_verdict_name(cert.verdict) << " (case "
       << knef_case_name(cert.knef_case) << ")\n";
    for (const auto& c : cert.checks)
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.description << ": " << c.values
           << "\n";
    for (const auto& a : cert.assumptions_consumed) os << "  assumes: " << a << "\n";
    os << "  degree bound " << cert.degree_bound << ", exceptional set "
       << (cert.exceptional_set_complete ? "complete" : "bounded") << "\n";
    if (cert.witness) os << "  witness: " << cert.witness->str() << "\n";
    if (!cert.notes.empty()) os << "  note: " << cert.notes << "\n";
    if (oracle) {
        os << "  oracle (box " << oracle->coeff_bound << "): "
           << (oracle->violation ? "violation" : "no_violation");
        if (oracle->witness)
            os << " at " << oracle->witness->str() << " (value " << oracle->value << ")";
        os << "\n  oracle agreement: " << (agree ? "yes" : "NO - bug sentinel") << "\n";
    }
    return os.str();
}

json sum_json(const MinimalityDecision& dec, const SplittingEnumeration* sp) {
    json j;
    j["verdict"] = minimality_verdict_name(dec.verdict);
    j["degree_bound"] = dec.degree_bound;
    if (dec.verdict == MinimalityVerdict::not_minimal_case_i) {
        j["witness_side"] = dec.witness_side;
        j["witness"] = dec.witness->str();
    }
    if (dec.verdict == MinimalityVerdict::conditional_case_ii) {
        j["ruled_side"] = dec.ruled_side;
        j["resolution"] = dec.resolution;
        if (dec.resolved_minimal) j["resolved_minimal"] = *dec.resolved_minimal;
        else j["resolved_minimal"] = nullptr;
    }
    if (dec.cert1) j["certificate_side1"] = knef_json(*dec.cert1, nullptr, true);
    if (dec.cert2) j["certificate_side2"] = knef_json(*dec.cert2, nullptr, true);
    j["assumptions"] = dec.assumptions;
    if (sp) {
        json s;
        s["certified_empty"] = sp->certified_empty;
        s["truncated"] = sp->truncated;
        s["caps"] = {{"coeff_bound", sp->caps.coeff_bound},
                     {"max_atoms", sp->caps.max_atoms},
                     {"max_mult", sp->caps.max_mult},
                     {"max_results", sp->caps.max_results}};
        s["candidates"] = {sp->candidates_side1, sp->candidates_side2};
        json list = json::array();
        for (const auto& x : sp->splittings)
            list.push_back({{"A1", x.A1.str()}, {"A2", x.A2.str()}, {"d", x.d}});
        s["splittings"] = list;
        if (!sp->note.empty()) s["note"] = sp->note;
        j["can_splittings"] = s;
    }
    return j;
}

std::string sum_text(const MinimalityDecision& dec, const SplittingEnumeration* sp) {
    std::ostringstream os;
    os << "minimality: " << minimality_verdict_name(dec.verdict) << "\n";
    if (dec.verdict == MinimalityVerdict::not_minimal_case_i)
        os << "  witness: side " << dec.witness_side << ", exceptional class "
           << dec.witness->str() << " disjoint from the gluing surface\n";
    if (dec.verdict == MinimalityVerdict::conditional_case_ii) {
        os << "  ruled section on side " << dec.ruled_side << "\n  " << dec.resolution << "\n";
        if (dec.resolved_minimal)
            os << "  resolved: Z is " << (*dec.resolved_minimal ? "minimal" : "not minimal")
               << "\n";
        else
            os << "  unresolved: the other side carries no minimality assertion\n";
    }
    if (dec.cert1)
        os << "  side 1 certificate: " << knef_verdict_name(dec.cert1->verdict) << " (case "
           << knef_case_name(dec.cert1->knef_case) << ", " << dec.cert1->checks.size()
           << " checks)\n";
    if (dec.cert2)
        os << "  side 2 certificate: " << knef_verdict_name(dec.cert2->verdict) << " (case "
           << knef_case_name(dec.cert2->knef_case) << ", " << dec.cert2->checks.size()
           << " checks)\n";
    for (const auto& a : dec.assumptions) os << "  assumes: " << a << "\n";
    if (sp) {
        os << "  splittings: ";
        if (sp->certified_empty)
            os << "empty (certified: " << sp->note << ")\n";
        else {
            os << sp->splittings.size() << (sp->truncated ? " (truncated)" : "") << "\n";
            for (const auto& x : sp->splittings)
                os << "    (A1 = " << x.A1.str() << ", A2 = " << x.A2.str() << ", d = " << x.d
                   << ")\n";
        }
    }
    return os.str();
}

json blocks_json(const std::vector<BuildingBlock>& blocks) {
    json arr = json::array();
    for (const auto& b : blocks) {
        json j;
        j["name"] = b.name;
        j["abstract"] = b.is_abstract;
        j["chern"] = chern_json(b.chern);
        j["noether"] = noether_check(b.chern.c1_sq, b.chern.c2);
        if (b.surface) {
            j["surface"] = {{"name", b.surface->name},
                            {"class", b.surface->cls.str()},
                            {"square", square(b.surface->cls)},
                            {"genus", b.surface->genus}};
        }
        if (!b.notes.empty()) j["notes"] = b.notes;
        arr.push_back(j);
    }
    return json{{"blocks", arr}};
}

std::string blocks_text(const std::vector<BuildingBlock>& blocks) {
    std::ostringstream os;
    for (const auto& b : blocks) {
        os << b.name << ": c1^2 = " << b.chern.c1_sq << ", c2 = " << b.chern.c2
           << (b.is_abstract ? " [abstract record]" : "");
        if (b.surface)
            os << "; surface " << b.surface->name << " = [" << b.surface->cls.str()
               << "], square " << square(b.surface->cls) << ", genus " << b.surface->genus;
        os << "\n";
        for (const auto& n : b.notes) os << "    note: " << n << "\n";
    }
    return os.str();
}

json region_json(const std::vector<std::pair<i64, i64>>& pts, i64 r) {
    json arr = json::array();
    for (auto& [a, b] : pts) arr.push_back({a, b});
    return json{{"r", r}, {"count", pts.size()}, {"points", arr}};
}

std::string region_text(const std::vector<std::pair<i64, i64>>& pts, i64 r) {
    std::ostringstream os;
    for (auto& [a, b] : pts) os << a << " " << b << "\n";
    os << "# " << pts.size() << " realizable pairs (r = " << r << ")\n";
    return os.str();
}

json chain_json(const ChainReport& rep) {
    json stages = json::array();
    for (const auto& s : rep.stages) {
        json j;
        j["verdict"] = minimality_verdict_name(s.decision.verdict);
        if (s.decision.verdict == MinimalityVerdict::conditional_case_ii &&
            s.decision.resolved_minimal)
            j["resolved_minimal"] = *s.decision.resolved_minimal;
        if (s.decision.witness) j["witness"] = s.decision.witness->str();
        j["folded_chern"] = chern_json(s.folded);
        j["c1_fold_exact"] = s.chern_c1_exact;
        j["euler_positive"] = s.euler_positive;
        j["assumptions"] = s.assumptions;
        stages.push_back(j);
    }
    return json{{"stages", stages},
                {"final_chern", chern_json(rep.final_chern)},
                {"all_minimal", rep.all_minimal},
                {"notes", rep.notes}};
}

std::string chain_text(const ChainReport& rep) {
    std::ostringstream os;
    for (size_t i = 0; i < rep.stages.size(); ++i) {
        const auto& s = rep.stages[i];
        os << "stage " << (i + 1) << ": " << minimality_verdict_name(s.decision.verdict);
        if (s.decision.verdict == MinimalityVerdict::conditional_case_ii &&
            s.decision.resolved_minimal)
            os << " (resolved " << (*s.decision.resolved_minimal ? "minimal" : "not minimal")
               << ")";
        if (s.decision.witness) os << " witness " << s.decision.witness->str();
        os << "; folded (c1^2, c2) = (" << s.folded.c1_sq << ", " << s.folded.c2 << ")"
           << (s.chern_c1_exact ? "" : " [c1^2 assumes signature additivity]")
           << (s.euler_positive ? ", c2 > 0" : ", c2 <= 0") << "\n";
        for (const auto& a : s.assumptions) os << "    assumes: " << a << "\n";
    }
    os << "chain: " << (rep.all_minimal ? "minimal at every stage" : "NOT minimal") << ", final "
       << "(c1^2, c2) = (" << rep.final_chern.c1_sq << ", " << rep.final_chern.c2 << ")\n";
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
    return os.str();
}

} // namespace symsum
