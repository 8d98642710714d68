// cli.cpp

#include "hhci/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>

#include "hhci/abelian.hpp"
#include "hhci/bar.hpp"
#include "hhci/cyclic.hpp"
#include "hhci/json_io.hpp"

namespace hhci {

namespace {

int default_max_degree() {
    if (const char* s = std::getenv("HHCI_MAX_DEGREE")) {
        try {
            return std::max(0, std::stoi(s));
        } catch (...) {
        }
    }
    return 8;
}

std::string dump(const Json& j, bool pretty) {
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

CliResult fail(int code, const std::string& type, const std::string& message,
               bool pretty) {
    Json j;
    j["error"]["type"] = type;
    j["error"]["message"] = message;
    return {code, dump(j, pretty)};
}

std::string rat_text(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

Json presentation_header(const Presentation& pres) {
    Json j;
    j["ring"] = pres.ring().to_text();
    j["vars"] = pres.vars();
    Json rels = Json::array();
    for (const Poly& f : pres.relations()) rels.push_back(pres.text(f));
    j["relations"] = rels;
    return j;
}

std::string regularity_source_text(RegularityInfo::Source s) {
    switch (s) {
        case RegularityInfo::Source::VerifiedGroebner: return "verified";
        case RegularityInfo::Source::CertifiedTriangular: return "certified-triangular";
        case RegularityInfo::Source::Assumed: return "assumed";
    }
    return "?";
}

std::vector<Int> parse_factor_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        // trim spaces
        std::size_t a = piece.find_first_not_of(' ');
        std::size_t b = piece.find_last_not_of(' ');
        if (a == std::string::npos)
            throw DomainError("empty entry in the group factor list");
        try {
            out.push_back(Int(piece.substr(a, b - a + 1)));
        } catch (const std::runtime_error&) {
            throw DomainError("cannot parse group factor '" + piece + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// subcommand handlers (inputs already loaded; hhci errors here mean exit 3)

Json handle_hh(const Presentation& pres, int max_degree) {
    Json out;
    out["command"] = "hh";
    out.update(presentation_header(pres));
    out["max_degree"] = max_degree;
    GradedModule gm = hh(pres, max_degree);
    HodgeTable table = hodge(pres, max_degree);
    out["assumptions"] = gm.assumptions;
    out["hh"] = graded_to_json(gm, max_degree);
    out["hodge"] = hodge_to_json(table);
    return out;
}

Json handle_cyclic(const Presentation& pres, int max_degree) {
    if (pres.nvars() != 1 || pres.nrels() != 1)
        throw DomainError("cyclic expects one variable and one relation");
    Json out;
    out["command"] = "cyclic";
    out.update(presentation_header(pres));
    out["max_degree"] = max_degree;
    CyclicReport rep = cyclic_hh(pres.relations()[0], max_degree);
    out["f"] = to_text(rep.f, {"x"});
    out["g"] = to_text(rep.g, {"x"});
    out["h"] = to_text(rep.h, {"x"});
    out["f_divided_2"] = to_text(rep.fdiv2, {"x"});
    out["classification"] = to_text(rep.classification);
    out["presentation"] = rep.presentation_text;
    out["assumptions"] = Json::array();
    out["hh"] = graded_to_json(rep.dims, max_degree);
    return out;
}

Json handle_group(const std::string& factors, const CoeffRing& ring, int max_degree) {
    std::vector<Int> input = parse_factor_list(factors);
    AbelianGroup g = AbelianGroup::from_factors(input);
    Json out;
    out["command"] = "group";
    out["ring"] = ring.to_text();
    Json raw = Json::array();
    for (const Int& n : input) raw.push_back(n.str());
    out["input_factors"] = raw;
    Json inv = Json::array();
    for (const Int& n : g.invariant_factors) inv.push_back(n.str());
    out["invariant_factors"] = inv;
    out["order"] = g.order().str();
    out["max_degree"] = max_degree;
    Json fs = Json::array();
    for (const Int& n : g.invariant_factors) {
        CliffordFactor cf = clifford_factor(n);
        Json f;
        f["n"] = cf.n.str();
        f["m"] = cf.m.str();
        fs.push_back(f);
    }
    out["factors"] = fs;
    out["assumptions"] = Json::array();
    out["group_cohomology"] = graded_to_json(group_cohomology(g, ring, max_degree),
                                             max_degree);
    out["hochschild"] = graded_to_json(group_hh(g, ring, max_degree), max_degree);
    return out;
}

Json handle_square(const Presentation& pres, const std::string& derivation_text) {
    DerivationVec d = parse_derivation(derivation_text, pres);
    Json out;
    out["command"] = "square";
    out.update(presentation_header(pres));
    Json dtexts = Json::array();
    for (const Poly& a : d) dtexts.push_back(pres.text(a));
    out["derivation"] = dtexts;
    bool isder = is_derivation(d, pres);
    out["is_derivation"] = isder;
    out["assumptions"] = Json::array();
    NormalVec q = hessian_q(d, pres);  // NotADerivation surfaces as exit 3
    Json qtexts = Json::array();
    for (const Poly& v : q) qtexts.push_back(pres.text(v));
    out["q"] = qtexts;
    CliffordElement cls = cup_square_class(d, pres);
    out["class"] = to_text(cls, pres);
    try {
        out["class_is_coboundary"] = is_coboundary(cls, pres);
    } catch (const Error&) {
        out["class_is_coboundary"] = nullptr;  // no finite basis to decide in
    }
    if (pres.ring().tag() == CoeffRing::Tag::Integers) {
        // the reduction of q(D) modulo (I, 2)
        try {
            CoeffRing f2 = CoeffRing::prime_field(2);
            std::vector<Poly> rels2;
            for (const Poly& f : pres.relations()) {
                Poly g = f.map_ring(f2);
                if (g.is_zero()) throw DomainError("relation vanishes mod 2");
                rels2.push_back(g);
            }
            Presentation p2(f2, pres.vars(), rels2);
            Json m2 = Json::array();
            for (const Poly& v : q) m2.push_back(p2.text(p2.normal_form(v.map_ring(f2))));
            out["q_mod_2"] = m2;
        } catch (const Error&) {
            out["q_mod_2"] = nullptr;
        }
    }
    return out;
}

Json handle_oracle(const Presentation& pres, int max_degree) {
    int d = std::min(max_degree, 3);
    Json out;
    out["command"] = "oracle";
    out.update(presentation_header(pres));
    out["max_degree"] = d;
    FiniteAlgebra alg = FiniteAlgebra::from_presentation(pres);
    GradedModule bar = bar_cohomology(alg, d);
    GradedModule cliff = hh(pres, d);
    out["assumptions"] = cliff.assumptions;
    out["bar"] = graded_to_json(bar, d);
    out["clifford"] = graded_to_json(cliff, d);
    bool agree = true;
    for (int p = 0; p <= d; ++p)
        if (!(bar.at(p) == cliff.at(p))) agree = false;
    out["agree"] = agree;
    return out;
}

Json handle_check(const Presentation& pres) {
    Json out;
    out["command"] = "check";
    out.update(presentation_header(pres));
    out["assumptions"] = Json::array();
    if (pres.nvars() == 1 && pres.nrels() == 1) {
        HciReport rep = hci_check_univariate(pres);
        out["classification"] = to_text(rep.cls);
        Json content = Json::array();
        for (const Rat& c : rep.content) content.push_back(rat_text(c));
        out["content"] = content;
        out["reason"] = rep.reason;
        if (rep.cls != HciClass::ZeroDivisor) {
            PeriodicModel model = periodic_model(pres.relations()[0]);
            out["delta"] = to_text(model.delta, {"x'", "x''"});
            out["periodic_exact"] = model.exact;
        }
    }
    Json reg;
    try {
        RegularityInfo info = regularity(pres);
        reg["regular"] = info.regular;
        reg["source"] = regularity_source_text(info.source);
        if (info.source == RegularityInfo::Source::Assumed)
            out["assumptions"].push_back("regular_sequence: assumed");
    } catch (const StrategyError& e) {
        reg["regular"] = nullptr;
        reg["source"] = "undecidable";
        reg["detail"] = e.what();
    }
    out["regular_sequence"] = reg;
    return out;
}

}  // namespace

CliResult run_cli(std::vector<std::string> args) {
    CLI::App app{"exact Hochschild cohomology of complete-intersection algebras"};
    app.require_subcommand(0, 1);

    int max_degree = default_max_degree();
    bool pretty = false;
    std::string file, derivation, factors, ring_text;

    CLI::App* cmd_hh = app.add_subcommand("hh", "cohomology of a presentation");
    cmd_hh->add_option("file", file, "presentation JSON file")->required();
    cmd_hh->add_option("-d,--max-degree", max_degree, "top cohomological degree");
    cmd_hh->add_flag("--pretty", pretty, "indent the JSON output");

    CLI::App* cmd_cyclic = app.add_subcommand("cyclic", "closed form for K[x]/(f)");
    cmd_cyclic->add_option("file", file)->required();
    cmd_cyclic->add_option("-d,--max-degree", max_degree);
    cmd_cyclic->add_flag("--pretty", pretty);

    CLI::App* cmd_group =
        app.add_subcommand("group", "group algebra of a finite abelian group");
    cmd_group->add_option("factors", factors, "cyclic factor orders, e.g. 2,4")
        ->required();
    cmd_group->add_option("-r,--ring", ring_text, "coefficient ring")->required();
    cmd_group->add_option("-d,--max-degree", max_degree);
    cmd_group->add_flag("--pretty", pretty);

    CLI::App* cmd_square =
        app.add_subcommand("square", "Hessian square of a derivation");
    cmd_square->add_option("file", file)->required();
    cmd_square->add_option("--derivation", derivation, "coefficients a_1,...,a_n")
        ->required();
    cmd_square->add_flag("--pretty", pretty);

    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "bar-complex comparison (degrees <= 3)");
    cmd_oracle->add_option("file", file)->required();
    cmd_oracle->add_option("-d,--max-degree", max_degree);
    cmd_oracle->add_flag("--pretty", pretty);

    CLI::App* cmd_check =
        app.add_subcommand("check", "homological-CI and regularity report");
    cmd_check->add_option("file", file)->required();
    cmd_check->add_flag("--pretty", pretty);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return fail(2, "CliError", e.what(), pretty);
    }
    if (app.get_subcommands().empty()) return {0, app.help()};

    // input phase
    std::optional<Presentation> pres;
    std::optional<CoeffRing> ring;
    try {
        if (*cmd_hh || *cmd_cyclic || *cmd_square || *cmd_oracle || *cmd_check)
            pres = load_presentation(file);
        if (*cmd_group) ring = CoeffRing::from_text(ring_text);
    } catch (const Error& e) {
        return fail(2, e.kind, e.what(), pretty);
    }

    // compute phase
    try {
        Json out;
        if (*cmd_hh)
            out = handle_hh(*pres, max_degree);
        else if (*cmd_cyclic)
            out = handle_cyclic(*pres, max_degree);
        else if (*cmd_group)
            out = handle_group(factors, *ring, max_degree);
        else if (*cmd_square)
            out = handle_square(*pres, derivation);
        else if (*cmd_oracle)
            out = handle_oracle(*pres, max_degree);
        else if (*cmd_check)
            out = handle_check(*pres);
        return {0, dump(out, pretty)};
    } catch (const Error& e) {
        return fail(3, e.kind, e.what(), pretty);
    } catch (const std::exception& e) {
        return fail(3, "InternalError", e.what(), pretty);
    }
}

}  // namespace hhci
