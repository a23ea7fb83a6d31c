#include "hly/cli.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"

#include "hly/presentation.hpp"

namespace hly {

namespace {

using nlohmann::json;

const char* kUsage =
    "usage: hly-forge <command> [...]\n"
    "\n"
    "  verify <kind> FILE        kind: hom-lie hly mult rep cocycle2 cocycle23\n"
    "                                  rota-baxter reynolds twisted-op ns-lie ns-hly\n"
    "  construct <kind> FILE     kind: induced-hly yau-twist semidirect\n"
    "                                  twisted-semidirect descendent v-structure\n"
    "                                  induced-rep ns-from-top ns-from-reynolds\n"
    "                                  subadjacent adjacent ns-from-ns-lie g-from-f\n"
    "  cohomology FILE           --level N (default 1), --twisted\n"
    "  search FILE               one JSON line per operator found\n"
    "  deform check FILE         per-order reports, --order N truncates\n"
    "\n"
    "options: --field rational|gf:p   expected field (mismatch is an error)\n"
    "         --block/--algebra/--rep/--pair/--op/--phi/--deformation NAME\n"
    "         --lambda n/d  --mu n/d  weights for reynolds commands\n"
    "         --max-failures K  --budget B  --order N  --level N\n"
    "         --strict          strict parsing and literal formula variants\n";

struct Options {
    std::string command, kind, file;
    std::map<std::string, std::string> named;   // block selectors
    std::string field_flag;
    std::string lambda_flag, mu_flag;
    int max_failures = 32;
    std::uint64_t budget = 1u << 20;
    int order = -1;
    int level = 1;
    bool twisted = false;
    bool strict = false;
};

struct CliError {
    std::string message;
};

[[noreturn]] void die(const std::string& msg) { throw CliError{msg}; }

Options parse_args(const std::vector<std::string>& args) {
    Options o;
    std::vector<std::string> positional;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto need_value = [&]() -> std::string {
            if (i + 1 >= args.size()) die("option " + a + " needs a value");
            return args[++i];
        };
        if (a == "--strict") {
            o.strict = true;
        } else if (a == "--twisted") {
            o.twisted = true;
        } else if (a == "--field") {
            o.field_flag = need_value();
        } else if (a == "--lambda") {
            o.lambda_flag = need_value();
        } else if (a == "--mu") {
            o.mu_flag = need_value();
        } else if (a == "--max-failures") {
            o.max_failures = std::stoi(need_value());
        } else if (a == "--budget") {
            o.budget = std::stoull(need_value());
        } else if (a == "--order") {
            o.order = std::stoi(need_value());
        } else if (a == "--level") {
            o.level = std::stoi(need_value());
        } else if (a == "--block" || a == "--algebra" || a == "--rep" || a == "--pair" ||
                   a == "--op" || a == "--phi" || a == "--deformation") {
            o.named[a.substr(2)] = need_value();
        } else if (!a.empty() && a[0] == '-') {
            die("unknown option " + a);
        } else {
            positional.push_back(a);
        }
    }
    if (positional.empty()) die("missing command");
    o.command = positional[0];
    if (o.command == "verify" || o.command == "construct" || o.command == "deform") {
        if (positional.size() != 3) die(o.command + " needs a kind and a file");
        o.kind = positional[1];
        o.file = positional[2];
    } else if (o.command == "cohomology" || o.command == "search") {
        if (positional.size() != 2) die(o.command + " needs a file");
        o.file = positional[1];
    } else {
        die("unknown command " + o.command);
    }
    return o;
}

Scalar parse_weight(const std::string& text, Field f) {
    auto slash = text.find('/');
    std::int64_t num = std::stoll(text.substr(0, slash));
    std::int64_t den = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
    return Scalar(num, den, f);
}

// block selection: an explicit name wins, otherwise the block of the wanted
// type must be unique
const Block& pick_block(const PresentationFile& p, const std::string& type,
                        const std::string& explicit_name, const std::string& what) {
    if (!explicit_name.empty()) {
        auto it = p.blocks.find(explicit_name);
        if (it == p.blocks.end()) die("no block named '" + explicit_name + "'");
        if (it->second.type != type)
            die("block '" + explicit_name + "' has type '" + it->second.type + "', expected '" +
                type + "'");
        return it->second;
    }
    const Block* found = nullptr;
    for (const auto& [name, blk] : p.blocks) {
        if (blk.type != type) continue;
        if (found) die("several '" + type + "' blocks; select one with --" + what);
        found = &blk;
    }
    if (!found) die("the file has no '" + type + "' block (needed for " + what + ")");
    return *found;
}

json scalar_str(const Scalar& s) { return s.str(); }

json report_json(const IdentityReport& rep) {
    json out;
    out["ok"] = rep.ok();
    json fails = json::array();
    for (const auto& f : rep.failures) {
        json e;
        e["identity"] = f.identity;
        e["where"] = f.where;
        json res = json::array();
        for (const auto& s : f.residual) res.push_back(scalar_str(s));
        e["residual"] = res;
        fails.push_back(e);
    }
    out["failures"] = fails;
    out["truncated"] = rep.truncated;
    return out;
}

HomLieRep hom_lie_rep_of(const HLYRep& r) {
    HomLieRep out;
    out.carrier_dim = r.carrier_dim;
    out.beta = r.beta;
    out.rho = r.rho;
    return out;
}

TwistedContext context_of(const PresentationFile& p, const Options& o) {
    TwistedContext c;
    c.H = *pick_block(p, "hly", o.named.count("algebra") ? o.named.at("algebra") : "", "algebra").hly;
    c.R = *pick_block(p, "rep", o.named.count("rep") ? o.named.at("rep") : "", "rep").rep;
    const Block* pb = nullptr;
    if (o.named.count("pair")) {
        pb = &pick_block(p, "cocycle_pair", o.named.at("pair"), "pair");
    } else {
        for (const auto& [name, blk] : p.blocks)
            if (blk.type == "cocycle_pair") pb = &blk;
    }
    if (pb) {
        c.pair = *pb->pair;
    } else {
        c.pair = CocyclePair{Tensor(2, c.H.dim, c.R.carrier_dim, c.H.binary.field),
                             Tensor(3, c.H.dim, c.R.carrier_dim, c.H.binary.field)};
    }
    return c;
}

Block hly_block(const HLYAlgebra& H) {
    Block b;
    b.type = "hly";
    b.hly = H;
    return b;
}

Block rep_block(const HLYRep& R) {
    Block b;
    b.type = "rep";
    b.rep = R;
    return b;
}

int emit_presentation(std::ostringstream& out, const PresentationFile& base,
                      std::map<std::string, Block> blocks) {
    PresentationFile p;
    p.field = base.field;
    p.blocks = std::move(blocks);
    out << serialize_presentation(p);
    return 0;
}

int run_verify(const Options& o, const PresentationFile& p, std::ostringstream& out) {
    IdentityReport rep;
    rep.cap = o.max_failures;
    auto alg_name = [&](const char* key) {
        return o.named.count(key) ? o.named.at(key) : std::string();
    };

    if (o.kind == "hom-lie") {
        rep = verify_hom_lie(*pick_block(p, "hom_lie", alg_name("algebra"), "algebra").hom_lie,
                             o.max_failures);
    } else if (o.kind == "hly") {
        rep = verify_hly(*pick_block(p, "hly", alg_name("algebra"), "algebra").hly, o.max_failures);
    } else if (o.kind == "mult") {
        // multiplicativity of whichever algebra block the file carries
        if (!alg_name("algebra").empty() || !p.blocks.empty()) {
            bool done = false;
            for (const auto& [name, blk] : p.blocks) {
                if (!alg_name("algebra").empty() && name != alg_name("algebra")) continue;
                if (blk.type == "hom_lie") {
                    rep = verify_multiplicative(*blk.hom_lie, o.max_failures);
                    done = true;
                } else if (blk.type == "hly") {
                    rep = verify_multiplicative(*blk.hly, o.max_failures);
                    done = true;
                }
                if (done) break;
            }
            if (!done) die("no algebra block to check");
        }
    } else if (o.kind == "rep") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const HLYRep& R = *pick_block(p, "rep", alg_name("rep"), "rep").rep;
        rep = verify_hly_rep(H, R, o.max_failures);
    } else if (o.kind == "cocycle2") {
        const HomLieAlgebra& L = *pick_block(p, "hom_lie", alg_name("algebra"), "algebra").hom_lie;
        const HLYRep& R = *pick_block(p, "rep", alg_name("rep"), "rep").rep;
        const Block& pb = pick_block(p, "cocycle_pair", alg_name("pair"), "pair");
        rep = verify_2cocycle_hom_lie(pb.pair->F, L, hom_lie_rep_of(R), o.max_failures);
    } else if (o.kind == "cocycle23") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const HLYRep& R = *pick_block(p, "rep", alg_name("rep"), "rep").rep;
        const Block& pb = pick_block(p, "cocycle_pair", alg_name("pair"), "pair");
        rep = verify_23cocycle(*pb.pair, H, R, o.max_failures);
    } else if (o.kind == "rota-baxter") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        rep = verify_rota_baxter(*ob.op, H, o.max_failures);
    } else if (o.kind == "reynolds") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        Scalar lam = ob.lambda ? *ob.lambda : Scalar::zero(p.field);
        Scalar mu = ob.mu ? *ob.mu : Scalar::zero(p.field);
        if (!o.lambda_flag.empty()) lam = parse_weight(o.lambda_flag, p.field);
        if (!o.mu_flag.empty()) mu = parse_weight(o.mu_flag, p.field);
        rep = verify_weighted_reynolds(*ob.op, lam, mu, H, o.max_failures);
    } else if (o.kind == "twisted-op") {
        TwistedContext c = context_of(p, o);
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        IdentityReport ctx_rep = verify_twisted_context(c, o.max_failures);
        if (!ctx_rep.ok()) {
            out << json{{"command", "verify twisted-op"},
                        {"context", report_json(ctx_rep)},
                        {"ok", false}}
                       .dump(2)
                << "\n";
            return 1;
        }
        rep = verify_twisted_op(*ob.op, c, o.max_failures);
    } else if (o.kind == "ns-lie") {
        rep = verify_ns_hom_lie(*pick_block(p, "ns_lie", alg_name("algebra"), "algebra").ns_lie,
                                o.max_failures);
    } else if (o.kind == "ns-hly") {
        // --strict evaluates the identities with the quoted readings of the
        // ambiguous spots instead of the self-consistent defaults
        NSReadings readings;
        if (o.strict) {
            readings.cyclic_first = false;
            readings.hat_cyclic_bracket = false;
            readings.final_twist_power = 2;
            readings.inner_slots_5_3_4 = false;
            readings.hat_cocycle3_first = false;
            readings.standard_hats_cocycle4 = false;
        }
        rep = verify_ns_hly(*pick_block(p, "ns_hly", alg_name("algebra"), "algebra").ns_hly,
                            o.max_failures, readings);
    } else {
        die("unknown verify kind '" + o.kind + "'");
    }

    json j = report_json(rep);
    j["command"] = "verify " + o.kind;
    out << j.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

int run_construct(const Options& o, const PresentationFile& p, std::ostringstream& out) {
    auto alg_name = [&](const char* key) {
        return o.named.count(key) ? o.named.at(key) : std::string();
    };

    if (o.kind == "induced-hly") {
        const HomLieAlgebra& L = *pick_block(p, "hom_lie", alg_name("algebra"), "algebra").hom_lie;
        return emit_presentation(out, p, {{"result", hly_block(induced_hly_from_hom_lie(L))}});
    }
    if (o.kind == "yau-twist") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const Block& ob = pick_block(p, "operator", alg_name("phi"), "phi");
        return emit_presentation(out, p, {{"result", hly_block(yau_twist(H, *ob.op))}});
    }
    if (o.kind == "semidirect") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const HLYRep& R = *pick_block(p, "rep", alg_name("rep"), "rep").rep;
        return emit_presentation(out, p, {{"result", hly_block(semidirect(H, R))}});
    }
    if (o.kind == "twisted-semidirect") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const HLYRep& R = *pick_block(p, "rep", alg_name("rep"), "rep").rep;
        const Block& pb = pick_block(p, "cocycle_pair", alg_name("pair"), "pair");
        return emit_presentation(out, p, {{"result", hly_block(twisted_semidirect(H, R, *pb.pair))}});
    }
    if (o.kind == "descendent") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        Scalar lam = ob.lambda ? *ob.lambda : Scalar::zero(p.field);
        Scalar mu = ob.mu ? *ob.mu : Scalar::zero(p.field);
        if (!o.lambda_flag.empty()) lam = parse_weight(o.lambda_flag, p.field);
        if (!o.mu_flag.empty()) mu = parse_weight(o.mu_flag, p.field);
        return emit_presentation(out, p,
                                 {{"result", hly_block(reynolds_descendent(*ob.op, lam, mu, H))}});
    }
    if (o.kind == "v-structure") {
        TwistedContext c = context_of(p, o);
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        return emit_presentation(out, p, {{"result", hly_block(v_structure(*ob.op, c))}});
    }
    if (o.kind == "induced-rep") {
        TwistedContext c = context_of(p, o);
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        return emit_presentation(
            out, p,
            {{"result", rep_block(induced_rep_from_top(*ob.op, c))},
             {"result_algebra", hly_block(v_structure(*ob.op, c))}});
    }
    if (o.kind == "ns-from-top") {
        TwistedContext c = context_of(p, o);
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        NSHLY N = ns_from_twisted_op(*ob.op, c);
        Block b;
        b.type = "ns_hly";
        b.ns_hly = N;
        return emit_presentation(out, p, {{"result", b}});
    }
    if (o.kind == "ns-from-reynolds") {
        const HLYAlgebra& H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        Scalar lam = ob.lambda ? *ob.lambda : Scalar::zero(p.field);
        Scalar mu = ob.mu ? *ob.mu : Scalar::zero(p.field);
        if (!o.lambda_flag.empty()) lam = parse_weight(o.lambda_flag, p.field);
        if (!o.mu_flag.empty()) mu = parse_weight(o.mu_flag, p.field);
        Block b;
        b.type = "ns_hly";
        b.ns_hly = ns_from_reynolds(*ob.op, lam, mu, H);
        return emit_presentation(out, p, {{"result", b}});
    }
    if (o.kind == "subadjacent") {
        const NSHLY& N = *pick_block(p, "ns_hly", alg_name("algebra"), "algebra").ns_hly;
        auto [H, R] = subadjacent_hly(N);
        return emit_presentation(out, p, {{"result", hly_block(H)}, {"result_rep", rep_block(R)}});
    }
    if (o.kind == "adjacent") {
        const NSHomLie& N = *pick_block(p, "ns_lie", alg_name("algebra"), "algebra").ns_lie;
        HomLieAlgebra L = adjacent_hom_lie(N);
        Block b;
        b.type = "hom_lie";
        b.hom_lie = L;
        return emit_presentation(out, p, {{"result", b}});
    }
    if (o.kind == "ns-from-ns-lie") {
        const NSHomLie& N = *pick_block(p, "ns_lie", alg_name("algebra"), "algebra").ns_lie;
        Block b;
        b.type = "ns_hly";
        b.ns_hly = ns_hly_from_ns_lie(N);
        return emit_presentation(out, p, {{"result", b}});
    }
    if (o.kind == "g-from-f") {
        const HomLieAlgebra& L = *pick_block(p, "hom_lie", alg_name("algebra"), "algebra").hom_lie;
        const HLYRep& R = *pick_block(p, "rep", alg_name("rep"), "rep").rep;
        const Block& pb = pick_block(p, "cocycle_pair", alg_name("pair"), "pair");
        Tensor G = g_from_f(pb.pair->F, L, hom_lie_rep_of(R));
        Block b;
        b.type = "cocycle_pair";
        b.pair = CocyclePair{pb.pair->F, G};
        b.pair_algebra_dim = L.dim;
        b.pair_carrier_dim = R.carrier_dim;
        return emit_presentation(out, p, {{"result", b}});
    }
    die("unknown construct kind '" + o.kind + "'");
}

int run_cohomology(const Options& o, const PresentationFile& p, std::ostringstream& out) {
    auto alg_name = [&](const char* key) {
        return o.named.count(key) ? o.named.at(key) : std::string();
    };
    HLYAlgebra H;
    HLYRep R;
    if (o.twisted) {
        TwistedContext c = context_of(p, o);
        const Block& ob = pick_block(p, "operator", alg_name("op"), "op");
        TwistedComplex tc = twisted_complex(*ob.op, c);
        H = tc.v_alg;
        R = tc.a_coeffs;
    } else {
        H = *pick_block(p, "hly", alg_name("algebra"), "algebra").hly;
        R = *pick_block(p, "rep", alg_name("rep"), "rep").rep;
    }
    CohomologyDims dims = cohomology_dims(o.level, H, R);
    // the product of the coboundary into this level with the one out of it;
    // at the bottom level nothing maps in, so the product is trivially zero
    bool dsq = true;
    if (o.level >= 1) dsq = delta_squared_check(H, R, o.level - 1).zero;
    json j;
    j["command"] = "cohomology";
    j["twisted"] = o.twisted;
    j["level"] = dims.level;
    j["dimC"] = dims.dim_c;
    j["dimZ"] = dims.dim_z;
    j["dimB"] = dims.dim_b;
    j["dimH"] = dims.dim_h;
    j["delta_squared_zero"] = dsq;
    out << j.dump(2) << "\n";
    return 0;
}

int run_search(const Options& o, const PresentationFile& p, std::ostringstream& out) {
    TwistedContext c = context_of(p, o);
    IdentityReport ctx_rep = verify_twisted_context(c, o.max_failures);
    if (!ctx_rep.ok()) {
        out << json{{"command", "search"}, {"context", report_json(ctx_rep)}, {"ok", false}}.dump(2)
            << "\n";
        return 1;
    }
    std::vector<Matrix> found = search_twisted_ops(c, o.budget);
    int index = 0;
    for (const Matrix& T : found) {
        json entries = json::array();
        for (int r = 0; r < T.rows; ++r)
            for (int cc = 0; cc < T.cols; ++cc)
                if (!T.at(r, cc).is_zero())
                    entries.push_back(json::array({r, cc, T.at(r, cc).num(), T.at(r, cc).den()}));
        json j;
        j["index"] = index++;
        j["code"] = encode_matrix(T);
        j["entries"] = entries;
        out << j.dump() << "\n";
    }
    return 0;
}

int run_deform(const Options& o, const PresentationFile& p, std::ostringstream& out) {
    if (o.kind != "check") die("unknown deform subcommand '" + o.kind + "'");
    auto alg_name = [&](const char* key) {
        return o.named.count(key) ? o.named.at(key) : std::string();
    };
    TwistedContext c = context_of(p, o);
    const Block& db = pick_block(p, "deformation", alg_name("deformation"), "deformation");
    std::vector<Matrix> coeffs = *db.deformation;
    if (o.order >= 0) {
        coeffs.resize(size_t(o.order) + 1,
                      Matrix(c.H.dim, c.R.carrier_dim, c.H.binary.field));
    }
    TruncatedDeformation d;
    d.order = int(coeffs.size()) - 1;
    d.coeffs = coeffs;
    d.ctx = c;

    IdentityReport rep = verify_deformation(d, o.max_failures);
    json orders = json::array();
    for (int s = 0; s <= d.order; ++s) {
        IdentityReport per;
        for (const auto& f : rep.failures)
            if (!f.where.empty() && f.where[0] == s) per.add(f.identity, f.where, f.residual);
        json oj = report_json(per);
        oj["order"] = s;
        orders.push_back(oj);
    }
    json j;
    j["command"] = "deform check";
    j["ok"] = rep.ok();
    j["orders"] = orders;
    if (d.order >= 1 && rep.ok()) {
        InfinitesimalCheck inf = infinitesimal_is_cocycle(d);
        j["infinitesimal_is_cocycle"] = inf.cocycle;
    }
    out << j.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    try {
        if (args.empty() || args[0] == "--help" || args[0] == "-h") {
            out << kUsage;
            return {args.empty() ? 2 : 0, out.str()};
        }
        Options o = parse_args(args);
        PresentationFile p = load_presentation(o.file, o.strict);
        if (!o.field_flag.empty()) {
            Field expect = o.field_flag == "rational"
                               ? Field::rationals()
                               : Field::gf(std::stoll(o.field_flag.substr(3)));
            if (o.field_flag.rfind("gf:", 0) != 0 && o.field_flag != "rational")
                die("--field takes 'rational' or 'gf:p'");
            if (expect != p.field)
                die("field mismatch: file is " + p.field.str() + ", flag says " + expect.str());
        }

        int code = 0;
        if (o.command == "verify")
            code = run_verify(o, p, out);
        else if (o.command == "construct")
            code = run_construct(o, p, out);
        else if (o.command == "cohomology")
            code = run_cohomology(o, p, out);
        else if (o.command == "search")
            code = run_search(o, p, out);
        else
            code = run_deform(o, p, out);
        return {code, out.str()};
    } catch (const CliError& e) {
        out << json{{"error", e.message}}.dump(2) << "\n";
        return {2, out.str()};
    } catch (const PreconditionError& e) {
        json j;
        j["error"] = e.what();
        j["report"] = report_json(e.report);
        out << j.dump(2) << "\n";
        return {1, out.str()};
    } catch (const ParseError& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        return {2, out.str()};
    } catch (const EngineError& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        return {2, out.str()};
    } catch (const std::exception& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        return {2, out.str()};
    }
}

}  // namespace hly
