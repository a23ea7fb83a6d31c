#include "hly/presentation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hly {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("presentation: " + where + ": " + what);
}

Scalar read_scalar(const json& num, const json& den, Field f, const std::string& where) {
    if (!num.is_number_integer() || !den.is_number_integer())
        fail(where, "numerator and denominator must be integers");
    std::int64_t n = num.get<std::int64_t>(), d = den.get<std::int64_t>();
    if (d == 0) fail(where, "entry with denominator 0");
    if (!f.is_rational() && d != 1) fail(where, "denominators must be 1 in GF(p) mode");
    return Scalar(n, d, f);
}

Matrix read_matrix(const json& j, int rows, int cols, Field f, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an entry list");
    Matrix m(rows, cols, f);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) fail(where, "matrix entries are [row, col, num, den]");
        int r = e[0].get<int>(), c = e[1].get<int>();
        if (r < 0 || r >= rows || c < 0 || c >= cols) fail(where, "index out of range");
        m.at(r, c) = read_scalar(e[2], e[3], f, where);
    }
    return m;
}

Tensor read_tensor(const json& j, int arity, int in_dim, int out_dim, Field f,
                   const std::string& where) {
    if (!j.is_array()) fail(where, "expected an entry list");
    Tensor t(arity, in_dim, out_dim, f);
    for (const auto& e : j) {
        if (!e.is_array() || int(e.size()) != arity + 3)
            fail(where, "tensor entries are [indices..., out, num, den]");
        std::vector<int> idx(arity);
        for (int s = 0; s < arity; ++s) {
            idx[s] = e[s].get<int>();
            if (idx[s] < 0 || idx[s] >= in_dim) fail(where, "index out of range");
        }
        int m = e[arity].get<int>();
        if (m < 0 || m >= out_dim) fail(where, "output index out of range");
        t.at(idx, m) = read_scalar(e[arity + 1], e[arity + 2], f, where);
    }
    return t;
}

std::vector<Matrix> read_family(const json& j, int keys, int dim, int rows, int cols, Field f,
                                const std::string& where) {
    if (!j.is_array()) fail(where, "expected an entry list");
    size_t family_size = 1;
    for (int s = 0; s < keys; ++s) family_size *= size_t(dim);
    std::vector<Matrix> fam(family_size, Matrix(rows, cols, f));
    for (const auto& e : j) {
        if (!e.is_array() || int(e.size()) != keys + 4)
            fail(where, "family entries are [slot indices..., row, col, num, den]");
        int pos = 0;
        for (int s = 0; s < keys; ++s) {
            int v = e[s].get<int>();
            if (v < 0 || v >= dim) fail(where, "family index out of range");
            pos = pos * dim + v;
        }
        int r = e[keys].get<int>(), c = e[keys + 1].get<int>();
        if (r < 0 || r >= rows || c < 0 || c >= cols) fail(where, "matrix index out of range");
        fam[pos].at(r, c) = read_scalar(e[keys + 2], e[keys + 3], f, where);
    }
    return fam;
}

int read_dim(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer()) fail(where, "missing dimension '" + key + "'");
    int d = j[key].get<int>();
    if (d < 1 || d > 64) fail(where, "dimension out of range");
    return d;
}

void check_keys(const json& j, const std::set<std::string>& allowed, bool strict,
                const std::string& where) {
    if (!strict) return;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) fail(where, "unknown key '" + it.key() + "' in strict mode");
}

json scalar_entry(const Scalar& s) { return json::array({s.num(), s.den()}); }

json matrix_entries(const Matrix& m) {
    json out = json::array();
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (!m.at(r, c).is_zero())
                out.push_back(json::array({r, c, m.at(r, c).num(), m.at(r, c).den()}));
    return out;
}

json tensor_entries(const Tensor& t) {
    json out = json::array();
    for_each_tuple(t.arity, t.in_dim, [&](const std::vector<int>& idx) {
        for (int m = 0; m < t.out_dim; ++m) {
            const Scalar& s = t.at(idx, m);
            if (s.is_zero()) continue;
            json e = json::array();
            for (int v : idx) e.push_back(v);
            e.push_back(m);
            e.push_back(s.num());
            e.push_back(s.den());
            out.push_back(e);
        }
    });
    return out;
}

json family_entries(const std::vector<Matrix>& fam, int keys, int dim) {
    json out = json::array();
    std::vector<int> idx(keys, 0);
    for (size_t pos = 0; pos < fam.size(); ++pos) {
        size_t rest = pos;
        for (int s = keys - 1; s >= 0; --s) {
            idx[s] = int(rest % dim);
            rest /= dim;
        }
        const Matrix& m = fam[pos];
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) {
                if (m.at(r, c).is_zero()) continue;
                json e = json::array();
                for (int v : idx) e.push_back(v);
                e.push_back(r);
                e.push_back(c);
                e.push_back(m.at(r, c).num());
                e.push_back(m.at(r, c).den());
                out.push_back(e);
            }
    }
    return out;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text, bool strict) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("presentation: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail("top level", "expected an object");
    check_keys(j, {"format_version", "field", "blocks"}, strict, "top level");

    PresentationFile p;
    if (j.contains("format_version")) {
        p.format_version = j["format_version"].get<std::string>();
        if (p.format_version != "1") fail("top level", "unsupported format_version");
    }
    if (!j.contains("field")) fail("top level", "missing 'field'");
    if (j["field"].is_string() && j["field"] == "rational") {
        p.field = Field::rationals();
    } else if (j["field"].is_object() && j["field"].contains("gf")) {
        p.field = Field::gf(j["field"]["gf"].get<std::int64_t>());
    } else {
        fail("field", "expected \"rational\" or {\"gf\": p}");
    }
    const Field f = p.field;

    if (!j.contains("blocks") || !j["blocks"].is_object()) fail("top level", "missing 'blocks'");
    for (auto it = j["blocks"].begin(); it != j["blocks"].end(); ++it) {
        const std::string& name = it.key();
        const json& b = *it;
        if (!b.is_object() || !b.contains("type")) fail(name, "block needs a 'type'");
        Block blk;
        blk.type = b["type"].get<std::string>();

        if (blk.type == "hom_lie") {
            check_keys(b, {"type", "dim", "alpha", "bracket"}, strict, name);
            int d = read_dim(b, "dim", name);
            HomLieAlgebra L;
            L.dim = d;
            L.alpha = read_matrix(b.value("alpha", json::array()), d, d, f, name + ".alpha");
            L.bracket = read_tensor(b.value("bracket", json::array()), 2, d, d, f, name + ".bracket");
            blk.hom_lie = std::move(L);
        } else if (blk.type == "hly") {
            check_keys(b, {"type", "dim", "alpha", "binary", "ternary"}, strict, name);
            int d = read_dim(b, "dim", name);
            HLYAlgebra H;
            H.dim = d;
            H.alpha = read_matrix(b.value("alpha", json::array()), d, d, f, name + ".alpha");
            H.binary = read_tensor(b.value("binary", json::array()), 2, d, d, f, name + ".binary");
            H.ternary = read_tensor(b.value("ternary", json::array()), 3, d, d, f, name + ".ternary");
            blk.hly = std::move(H);
        } else if (blk.type == "rep") {
            check_keys(b, {"type", "algebra_dim", "carrier_dim", "beta", "rho", "theta"}, strict,
                       name);
            int ad = read_dim(b, "algebra_dim", name);
            int cd = read_dim(b, "carrier_dim", name);
            HLYRep R;
            R.carrier_dim = cd;
            R.beta = read_matrix(b.value("beta", json::array()), cd, cd, f, name + ".beta");
            R.rho = read_family(b.value("rho", json::array()), 1, ad, cd, cd, f, name + ".rho");
            R.theta = read_family(b.value("theta", json::array()), 2, ad, cd, cd, f, name + ".theta");
            blk.rep = std::move(R);
        } else if (blk.type == "cocycle_pair") {
            check_keys(b, {"type", "algebra_dim", "carrier_dim", "f", "g"}, strict, name);
            int ad = read_dim(b, "algebra_dim", name);
            int cd = read_dim(b, "carrier_dim", name);
            CocyclePair pair;
            pair.F = read_tensor(b.value("f", json::array()), 2, ad, cd, f, name + ".f");
            pair.G = read_tensor(b.value("g", json::array()), 3, ad, cd, f, name + ".g");
            blk.pair = std::move(pair);
            blk.pair_algebra_dim = ad;
            blk.pair_carrier_dim = cd;
        } else if (blk.type == "operator") {
            check_keys(b, {"type", "rows", "cols", "entries", "lambda", "mu"}, strict, name);
            int rows = read_dim(b, "rows", name);
            int cols = read_dim(b, "cols", name);
            blk.op = read_matrix(b.value("entries", json::array()), rows, cols, f, name + ".entries");
            if (b.contains("lambda")) {
                const json& l = b["lambda"];
                if (!l.is_array() || l.size() != 2) fail(name, "lambda is [num, den]");
                blk.lambda = read_scalar(l[0], l[1], f, name + ".lambda");
            }
            if (b.contains("mu")) {
                const json& l = b["mu"];
                if (!l.is_array() || l.size() != 2) fail(name, "mu is [num, den]");
                blk.mu = read_scalar(l[0], l[1], f, name + ".mu");
            }
        } else if (blk.type == "ns_hly") {
            check_keys(b, {"type", "dim", "alpha", "circ", "vee", "curly", "square"}, strict, name);
            int d = read_dim(b, "dim", name);
            NSHLY N;
            N.dim = d;
            N.alpha = read_matrix(b.value("alpha", json::array()), d, d, f, name + ".alpha");
            N.circ = read_tensor(b.value("circ", json::array()), 2, d, d, f, name + ".circ");
            N.vee = read_tensor(b.value("vee", json::array()), 2, d, d, f, name + ".vee");
            N.curly = read_tensor(b.value("curly", json::array()), 3, d, d, f, name + ".curly");
            N.square = read_tensor(b.value("square", json::array()), 3, d, d, f, name + ".square");
            blk.ns_hly = std::move(N);
        } else if (blk.type == "ns_lie") {
            check_keys(b, {"type", "dim", "alpha", "circ", "vee"}, strict, name);
            int d = read_dim(b, "dim", name);
            NSHomLie N;
            N.dim = d;
            N.alpha = read_matrix(b.value("alpha", json::array()), d, d, f, name + ".alpha");
            N.circ = read_tensor(b.value("circ", json::array()), 2, d, d, f, name + ".circ");
            N.vee = read_tensor(b.value("vee", json::array()), 2, d, d, f, name + ".vee");
            blk.ns_lie = std::move(N);
        } else if (blk.type == "deformation") {
            check_keys(b, {"type", "rows", "cols", "coeffs"}, strict, name);
            int rows = read_dim(b, "rows", name);
            int cols = read_dim(b, "cols", name);
            if (!b.contains("coeffs") || !b["coeffs"].is_array()) fail(name, "missing 'coeffs'");
            std::vector<Matrix> coeffs;
            for (size_t i = 0; i < b["coeffs"].size(); ++i)
                coeffs.push_back(read_matrix(b["coeffs"][i], rows, cols, f,
                                             name + ".coeffs[" + std::to_string(i) + "]"));
            if (coeffs.empty()) fail(name, "deformation needs at least T_0");
            blk.deformation = std::move(coeffs);
        } else {
            fail(name, "unknown block type '" + blk.type + "'");
        }
        p.blocks.emplace(name, std::move(blk));
    }
    return p;
}

PresentationFile load_presentation(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw ParseError("presentation: cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), strict);
}

std::string serialize_presentation(const PresentationFile& p) {
    json j;
    j["format_version"] = p.format_version;
    if (p.field.is_rational())
        j["field"] = "rational";
    else
        j["field"] = json{{"gf", p.field.p}};
    json blocks = json::object();
    for (const auto& [name, blk] : p.blocks) {
        json b;
        b["type"] = blk.type;
        if (blk.hom_lie) {
            b["dim"] = blk.hom_lie->dim;
            b["alpha"] = matrix_entries(blk.hom_lie->alpha);
            b["bracket"] = tensor_entries(blk.hom_lie->bracket);
        } else if (blk.hly) {
            b["dim"] = blk.hly->dim;
            b["alpha"] = matrix_entries(blk.hly->alpha);
            b["binary"] = tensor_entries(blk.hly->binary);
            b["ternary"] = tensor_entries(blk.hly->ternary);
        } else if (blk.rep) {
            b["algebra_dim"] = blk.rep->algebra_dim();
            b["carrier_dim"] = blk.rep->carrier_dim;
            b["beta"] = matrix_entries(blk.rep->beta);
            b["rho"] = family_entries(blk.rep->rho, 1, blk.rep->algebra_dim());
            b["theta"] = family_entries(blk.rep->theta, 2, blk.rep->algebra_dim());
        } else if (blk.pair) {
            b["algebra_dim"] = blk.pair_algebra_dim;
            b["carrier_dim"] = blk.pair_carrier_dim;
            b["f"] = tensor_entries(blk.pair->F);
            b["g"] = tensor_entries(blk.pair->G);
        } else if (blk.op) {
            b["rows"] = blk.op->rows;
            b["cols"] = blk.op->cols;
            b["entries"] = matrix_entries(*blk.op);
            if (blk.lambda) b["lambda"] = scalar_entry(*blk.lambda);
            if (blk.mu) b["mu"] = scalar_entry(*blk.mu);
        } else if (blk.ns_hly) {
            b["dim"] = blk.ns_hly->dim;
            b["alpha"] = matrix_entries(blk.ns_hly->alpha);
            b["circ"] = tensor_entries(blk.ns_hly->circ);
            b["vee"] = tensor_entries(blk.ns_hly->vee);
            b["curly"] = tensor_entries(blk.ns_hly->curly);
            b["square"] = tensor_entries(blk.ns_hly->square);
        } else if (blk.ns_lie) {
            b["dim"] = blk.ns_lie->dim;
            b["alpha"] = matrix_entries(blk.ns_lie->alpha);
            b["circ"] = tensor_entries(blk.ns_lie->circ);
            b["vee"] = tensor_entries(blk.ns_lie->vee);
        } else if (blk.deformation) {
            b["rows"] = (*blk.deformation)[0].rows;
            b["cols"] = (*blk.deformation)[0].cols;
            json coeffs = json::array();
            for (const Matrix& m : *blk.deformation) coeffs.push_back(matrix_entries(m));
            b["coeffs"] = coeffs;
        }
        blocks[name] = b;
    }
    j["blocks"] = blocks;
    return j.dump(2) + "\n";
}

}  // namespace hly
