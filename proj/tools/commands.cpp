#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"

namespace ftflag::cli {

namespace {

using io::json;

struct Globals {
    std::string format = "json";
    bool dot = false;
    std::string matrix;
    std::string diagram;
    std::vector<int> mark;
};

// A command failed with a known exit code after printing its message.
struct Exit {
    int code;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

Word parse_word(const std::vector<std::string>& tokens) {
    Word w;
    for (const auto& t : tokens) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size() || t.empty()) throw Error(Errc::Parse, "bad letter '" + t + "'");
        w.push_back(v);
    }
    return w;
}

/// The matrix named by --matrix, --diagram, or (when allowed) the first positional.
CartanMatrix resolve(const Globals& g, std::vector<std::string>& positionals, bool positional_spec) {
    if (!g.matrix.empty() && !g.diagram.empty())
        throw Error(Errc::Parse, "give either --matrix or --diagram, not both");
    if (!g.matrix.empty()) return validate_gcm(io::parse_matrix(g.matrix));
    if (!g.diagram.empty()) return parse_diagram_spec(g.diagram);
    if (positional_spec && !positionals.empty()) {
        const std::string spec = positionals.front();
        positionals.erase(positionals.begin());
        return parse_diagram_spec(spec);
    }
    throw Error(Errc::Parse, "no diagram given (use --diagram or --matrix)");
}

void require_json(const Globals& g, const std::string& cmd) {
    if (g.format != "json" || g.dot)
        throw Error(Errc::Parse, "dot output is only available for 'diagram', not '" + cmd + "'");
}

NodeSet marking_or_full(const Globals& g, int rank) {
    if (!g.mark.empty()) {
        NodeSet s = g.mark;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
    return complement({}, rank);
}

int cmd_classify(const Globals& g, std::vector<std::string> pos, std::ostream& out) {
    require_json(g, "classify");
    const CartanMatrix m = resolve(g, pos, true);
    const auto v = classify(m);
    std::optional<int> bound;
    if (v.kind == Kind::Finite) bound = flag_dimension(m, complement({}, m.rank()));
    emit(out, io::classification_json(v, bound));
    return v.kind == Kind::Finite ? kOk : kContradiction;
}

int cmd_roots(const Globals& g, std::vector<std::string> pos, std::ostream& out) {
    require_json(g, "roots");
    const CartanMatrix m = resolve(g, pos, true);
    const auto& roots = positive_roots(m);
    json o;
    o["rank"] = m.rank();
    o["count"] = roots.size();
    json rs = json::array(), hs = json::array();
    for (const auto& r : roots) {
        rs.push_back(io::to_json(r));
        hs.push_back(height(r));
    }
    o["positive_roots"] = std::move(rs);
    o["heights"] = std::move(hs);
    o["anticanonical"] = io::to_json(anticanonical_coefficients(m));
    emit(out, o);
    return kOk;
}

int cmd_dim(const Globals& g, std::vector<std::string> pos, const std::string& spec_json, std::ostream& out) {
    require_json(g, "dim");
    Globals local = g;
    if (!spec_json.empty()) {
        json j;
        try {
            j = json::parse(spec_json);
        } catch (const json::parse_error& e) {
            throw Error(Errc::Parse, std::string("malformed JSON: ") + e.what());
        }
        const auto s = io::parse_marked_spec(j);
        local.diagram = s.diagram;
        local.matrix.clear();
        local.mark = s.marked;
    }
    const CartanMatrix m = resolve(local, pos, true);
    const NodeSet marked = marking_or_full(local, m.rank());
    const MarkedDiagram md(m, marked);

    json o;
    o["marked"] = md.marked;
    o["dimension"] = flag_dimension(m, md.marked);
    if (md.marked.size() < static_cast<std::size_t>(m.rank())) {
        json rc = json::array();
        for (const auto& [node, coeff] : relative_canonical_coefficients(m, md.marked))
            rc.push_back(json{{"node", node}, {"coefficient", coeff}});
        o["relative_canonical"] = std::move(rc);
    } else {
        o["relative_canonical"] = nullptr;
    }
    o["minimal_ample_weight"] = io::to_json(minimal_ample_weight(md).coords);
    emit(out, o);
    return kOk;
}

int cmd_chain(const Globals& g, std::vector<std::string> pos, const std::vector<std::string>& equal_to,
              std::ostream& out) {
    require_json(g, "chain");
    const CartanMatrix m = resolve(g, pos, true);
    const WeylGroup w(m);
    const Word word = parse_word(pos);
    const int dimension = w.chain_dimension(word);
    json o;
    o["dimension"] = dimension;
    o["saturated"] = dimension == static_cast<int>(w.roots().size());
    o["reduced"] = w.is_reduced(word);
    if (!equal_to.empty()) o["equal"] = w.chain_equal(word, parse_word(equal_to));
    emit(out, o);
    return kOk;
}

int cmd_hecke_words(const Globals& g, std::vector<std::string> pos, int max_rank, std::ostream& out) {
    require_json(g, "hecke-words");
    const CartanMatrix m = resolve(g, pos, true);
    const WeylGroup w(m);
    const HeckeElement h = pos.empty() ? w.longest_element().first : w.demazure_product(parse_word(pos));
    const auto words = w.reduced_words(h, max_rank);
    json o;
    o["length"] = w.length(h);
    o["count"] = words.size();
    json ws = json::array();
    for (const auto& word : words) ws.push_back(word);
    o["words"] = std::move(ws);
    emit(out, o);
    return kOk;
}

int cmd_ft_verify(const Globals& g, const std::string& path, std::ostream& out, std::ostream& err) {
    require_json(g, "ft-verify");
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw Error(Errc::Parse, std::string("malformed JSON in '") + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("intersection_matrix"))
        throw Error(Errc::Parse, "expected {\"intersection_matrix\": [[...]]}");

    CartanMatrix m = [&] {
        try {
            return ingest(IntersectionData{io::parse_matrix(j.at("intersection_matrix"))});
        } catch (const Error& e) {
            if (e.code() != Errc::ProductOutOfRange) throw;
            err << "not FT-realizable: " << e.what() << '\n';
            throw Exit{kNotRealizable};
        }
    }();
    const FTReport r = verdict(m);
    emit(out, io::ft_report_json(m, r));
    return r.consistency == Consistency::Consistent ? kOk : kContradiction;
}

int cmd_induct(const Globals& g, std::vector<std::string> pos, std::ostream& out) {
    require_json(g, "induct");
    json o;
    if (!g.matrix.empty()) {
        const CartanMatrix m = validate_gcm(io::parse_matrix(g.matrix));
        if (g.mark.empty()) throw Error(Errc::Parse, "--matrix needs --mark for the start set");
        const NodeSet start = marking_or_full(g, m.rank());
        o["diagram"] = nullptr;
        o["start"] = start;
        o["sequence"] = io::to_json(induction_sequence(m, start));
    } else {
        const std::string spec = !g.diagram.empty() ? g.diagram : (pos.empty() ? "" : pos.front());
        if (spec.empty()) throw Error(Errc::Parse, "no diagram given");
        const CartanType t = parse_cartan_type(spec);
        o["diagram"] = t.name();
        o["start"] = induction_start(t);
        o["sequence"] = io::to_json(induction_sequence(t));
    }
    emit(out, o);
    return kOk;
}

int cmd_pic2(const Globals& g, const std::vector<long>& nums, std::ostream& out) {
    require_json(g, "pic2");
    if (nums.size() != 2 && nums.size() != 5) throw Error(Errc::Parse, "pic2 takes nu1 nu2 [mu1 mu2 m]");
    using namespace picard2;
    const long nu1 = nums[0], nu2 = nums[1];
    if (nu1 < 0 || nu2 < 0) throw Error(Errc::Parse, "nu must be nonnegative");
    const auto c = classify_rank2(nu1, nu2);

    json o;
    o["nu1"] = nu1;
    o["nu2"] = nu2;
    o["product"] = nu1 * nu2;
    o["type"] = rank2_type_name(c.type);
    o["reason"] = c.reason.empty() ? json(nullptr) : json(c.reason);

    if (nums.size() == 5) {
        const Rank2Data d{nu1, nu2, nums[2], nums[3], nums[4]};
        if (d.mu1 < 1 || d.mu2 < 1 || d.m < 1) throw Error(Errc::Parse, "mu1, mu2 and m must be positive");
        const bool admissible = admissible_degrees(std::max<long>(d.m, 6)).count(static_cast<int>(d.m)) > 0;
        const auto a = basechange_matrix(d);
        o["mu1"] = d.mu1;
        o["mu2"] = d.mu2;
        o["m"] = d.m;
        o["admissible_degree"] = admissible;
        o["basechange"] = json::array({json::array({to_string(a(0, 0)), to_string(a(0, 1))}),
                                       json::array({to_string(a(1, 0)), to_string(a(1, 1))})});
        if (admissible && nu1 > 0 && nu2 > 0) {
            const Rational d1 = discriminant_for(d.m, nu1, d.mu1);
            const Rational d2 = discriminant_for(d.m, nu2, d.mu2);
            o["discriminants"] = json::array({to_string(d1), to_string(d2)});
            const int p = static_cast<int>(d.m + 1);
            o["im_power_vanishes"] = json::array({im_power_vanishes({Rational(nu1) / d.mu1, -d1}, p),
                                                  im_power_vanishes({Rational(nu2) / d.mu2, -d2}, p)});
        } else {
            o["discriminants"] = nullptr;
            o["im_power_vanishes"] = nullptr;
        }
        o["cos_identity"] = admissible ? json(verify_cos_identity(d.m, d)) : json(nullptr);
    }
    emit(out, o);
    return c.type == Rank2Type::Invalid ? kContradiction : kOk;
}

int cmd_diagram(const Globals& g, std::vector<std::string> pos, std::ostream& out) {
    const CartanMatrix m = resolve(g, pos, true);
    const DynkinDiagram d = to_diagram(m);
    if (g.dot || g.format == "dot") {
        out << to_dot(d);
        return kOk;
    }
    if (g.format != "json") throw Error(Errc::Parse, "unknown format '" + g.format + "'");
    json o = io::to_json(d);
    o["matrix"] = matrix_to_rows(m.matrix());
    if (!g.mark.empty()) o["marked"] = MarkedDiagram(m, g.mark).marked;
    emit(out, o);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cartan matrices, root systems, 0-Hecke monoids and FT-manifold checks", "ftflag"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    app.add_flag("--dot", g.dot, "Same as --format dot");
    app.add_option("--matrix", g.matrix, "Cartan matrix as JSON, e.g. [[2,-1],[-1,2]]");
    app.add_option("--diagram", g.diagram, "Diagram spec, e.g. A3 or A2xA1");
    app.add_option("--mark", g.mark, "Marked nodes, 1-based")->delimiter(',');

    std::vector<std::string> pos;
    auto* classify_cmd = app.add_subcommand("classify", "Finite/affine/indefinite verdict");
    classify_cmd->add_option("spec", pos, "Diagram spec");

    auto* roots_cmd = app.add_subcommand("roots", "Positive roots and anticanonical coefficients");
    roots_cmd->add_option("spec", pos, "Diagram spec");

    std::string marked_json;
    auto* dim_cmd = app.add_subcommand("dim", "Dimension of the flag manifold of a marked diagram");
    dim_cmd->add_option("spec", pos, "Diagram spec");
    dim_cmd->add_option("--json", marked_json, "Marked diagram JSON {\"diagram\":\"A4\",\"marked\":[1,4]}");

    std::vector<std::string> equal_to;
    auto* chain_cmd = app.add_subcommand("chain", "Chain-locus dimension of a word");
    chain_cmd->add_option("args", pos, "Diagram spec followed by letters");
    chain_cmd->add_option("--equal", equal_to, "Second word to compare in the 0-Hecke monoid")->delimiter(',');

    int max_rank = 4;
    auto* hecke_cmd = app.add_subcommand("hecke-words", "Reduced words of a 0-Hecke element (default: longest)");
    hecke_cmd->add_option("args", pos, "Diagram spec followed by letters");
    hecke_cmd->add_option("--max-rank", max_rank, "Largest rank to enumerate");

    std::string path;
    auto* ft_cmd = app.add_subcommand("ft-verify", "Validate and classify FT intersection data");
    ft_cmd->add_option("path", path, "JSON file {\"intersection_matrix\": [[...]]}")->required();

    auto* induct_cmd = app.add_subcommand("induct", "Induction sequence of marked diagrams");
    induct_cmd->add_option("type", pos, "Connected type, e.g. D5");

    std::vector<long> nums;
    auto* pic2_cmd = app.add_subcommand("pic2", "Picard-number-two numeric checks");
    pic2_cmd->add_option("values", nums, "nu1 nu2 [mu1 mu2 m]")->required();

    auto* diagram_cmd = app.add_subcommand("diagram", "Dynkin diagram as JSON or DOT");
    diagram_cmd->add_option("spec", pos, "Diagram spec");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*classify_cmd) return cmd_classify(g, pos, out);
        if (*roots_cmd) return cmd_roots(g, pos, out);
        if (*dim_cmd) return cmd_dim(g, pos, marked_json, out);
        if (*chain_cmd) return cmd_chain(g, pos, equal_to, out);
        if (*hecke_cmd) return cmd_hecke_words(g, pos, max_rank, out);
        if (*ft_cmd) return cmd_ft_verify(g, path, out, err);
        if (*induct_cmd) return cmd_induct(g, pos, out);
        if (*pic2_cmd) return cmd_pic2(g, nums, out);
        if (*diagram_cmd) return cmd_diagram(g, pos, out);
    } catch (const Exit& e) {
        return e.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace ftflag::cli
