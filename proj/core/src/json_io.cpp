#include "coch/json_io.hpp"

namespace coch {

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("key \"") + key + "\" must be an integer");
    return v.get<int>();
}

Scalar scalar_from_json(const json& j, const Field& f) {
    if (f.is_fp()) {
        if (!j.is_number_integer()) throw ParseError("prime-field entry must be an integer");
        return Scalar::from_int(f, j.get<long>());
    }
    if (!j.is_string()) throw ParseError("rational entry must be a \"num/den\" string");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) throw ParseError("rational entry must contain '/'");
    try {
        mpq_class q(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        if (q.get_den() == 0) throw ParseError("rational entry has zero denominator");
        return Scalar::rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational entry \"" + s + "\"");
    }
}

json scalar_to_json(const Scalar& s) {
    if (s.field().is_fp()) return json(s.residue());
    return json(s.to_string());
}

}  // namespace

json field_to_json(const Field& f) {
    if (f.is_fp()) return json{{"kind", "fp"}, {"p", f.prime()}};
    return json{{"kind", "q"}};
}

Field field_from_json(const json& j) {
    std::string kind = need(j, "kind").get<std::string>();
    if (kind == "fp") {
        long p = need(j, "p").get<long>();
        if (p < 2) throw ParseError("field modulus must be at least 2");
        try {
            return Field::fp(static_cast<std::uint64_t>(p));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    if (kind == "q") return Field::rationals();
    throw ParseError("unknown field kind \"" + kind + "\"");
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(scalar_to_json(m.at(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j, const Field& f) {
    int rows = need_int(j, "rows"), cols = need_int(j, "cols");
    if (rows < 0 || cols < 0) throw ParseError("matrix shape must be nonnegative");
    const json& entries = need(j, "entries");
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw ParseError("matrix entries must be an array of rows*cols values");
    Matrix m(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t k = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, scalar_from_json(entries[k++], f));
    return m;
}

json complex_to_json(const Complex& x) {
    json dims = json::object(), diff = json::object();
    for (int i = x.lo(); i <= x.hi(); ++i) dims[std::to_string(i)] = x.dim(i);
    for (int i = x.lo(); i < x.hi(); ++i) diff[std::to_string(i)] = matrix_to_json(x.diff(i));
    return json{{"field", field_to_json(x.field())},
                {"lo", x.lo()},
                {"hi", x.hi()},
                {"dims", std::move(dims)},
                {"diff", std::move(diff)}};
}

Complex complex_from_json(const json& j) {
    Field f = field_from_json(need(j, "field"));
    int lo = need_int(j, "lo"), hi = need_int(j, "hi");
    if (hi < lo - 1) throw ParseError("support window needs lo <= hi + 1");
    const json& dims = need(j, "dims");
    std::vector<int> dv;
    for (int i = lo; i <= hi; ++i) {
        auto it = dims.find(std::to_string(i));
        int d = it == dims.end() ? 0 : it->get<int>();
        if (d < 0) throw ParseError("negative dimension at degree " + std::to_string(i));
        dv.push_back(d);
    }
    const json* diff = j.contains("diff") ? &j.at("diff") : nullptr;
    std::vector<Matrix> mv;
    for (int i = lo; i < hi; ++i) {
        std::size_t rows = static_cast<std::size_t>(dv[static_cast<std::size_t>(i - lo) + 1]);
        std::size_t cols = static_cast<std::size_t>(dv[static_cast<std::size_t>(i - lo)]);
        if (diff && diff->contains(std::to_string(i))) {
            Matrix m = matrix_from_json(diff->at(std::to_string(i)), f);
            if (m.rows() != rows || m.cols() != cols)
                throw ParseError("differential shape mismatch at degree " + std::to_string(i));
            mv.push_back(std::move(m));
        } else {
            mv.push_back(Matrix::zero(f, rows, cols));
        }
    }
    try {
        return Complex(f, lo, std::move(dv), std::move(mv));
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

json graded_map_to_json(const GradedMap& f) {
    json blocks = json::object();
    for (int i = f.src().lo(); i <= f.src().hi(); ++i)
        if (f.src().dim(i) > 0 && f.tgt().dim(i + f.degree()) > 0)
            blocks[std::to_string(i)] = matrix_to_json(f.block(i));
    return json{{"degree", f.degree()}, {"blocks", std::move(blocks)}};
}

GradedMap graded_map_from_json(const json& j, const Complex& src, const Complex& tgt,
                               int degree) {
    int deg = need_int(j, "degree");
    if (deg != degree)
        throw ParseError("map has degree " + std::to_string(deg) + ", expected " +
                         std::to_string(degree));
    GradedMap f(src, tgt, degree);
    const json& blocks = need(j, "blocks");
    if (!blocks.is_object()) throw ParseError("blocks must be an object");
    for (auto it = blocks.begin(); it != blocks.end(); ++it) {
        int i;
        try {
            i = std::stoi(it.key());
        } catch (const std::exception&) {
            throw ParseError("block key \"" + it.key() + "\" is not a degree");
        }
        Matrix m = matrix_from_json(it.value(), src.field());
        try {
            f.set_block(i, std::move(m));
        } catch (const DimensionError& e) {
            throw ParseError(e.what());
        }
    }
    return f;
}

json chain_map_to_json(const GradedMap& f) {
    return json{{"src", complex_to_json(f.src())},
                {"tgt", complex_to_json(f.tgt())},
                {"map", graded_map_to_json(f)}};
}

GradedMap chain_map_from_json(const json& j) {
    Complex src = complex_from_json(need(j, "src"));
    Complex tgt = complex_from_json(need(j, "tgt"));
    if (src.field() != tgt.field()) throw ParseError("chain map endpoints over different fields");
    return graded_map_from_json(need(j, "map"), src, tgt, 0);
}

json ar_to_json(const AcyclicRetraction& x) {
    return json{{"M", complex_to_json(x.M)},
                {"N", complex_to_json(x.N)},
                {"iota", graded_map_to_json(x.iota)},
                {"pi", graded_map_to_json(x.pi)}};
}

AcyclicRetraction ar_from_json(const json& j) {
    AcyclicRetraction x;
    x.M = complex_from_json(need(j, "M"));
    x.N = complex_from_json(need(j, "N"));
    if (x.M.field() != x.N.field()) throw ParseError("diagram complexes over different fields");
    x.iota = graded_map_from_json(need(j, "iota"), x.M, x.N, 0);
    x.pi = graded_map_from_json(need(j, "pi"), x.N, x.M, 0);
    return x;
}

json sdr_to_json(const Sdr& x) {
    json j = ar_to_json(x.ar);
    j["h"] = graded_map_to_json(x.h);
    return j;
}

Sdr sdr_from_json(const json& j) {
    Sdr x;
    x.ar = ar_from_json(j);
    x.h = graded_map_from_json(need(j, "h"), x.ar.N, x.ar.N, -1);
    return x;
}

json ar_morphism_to_json(const ArMorphism& m) {
    return json{{"src", ar_to_json(m.src)},
                {"tgt", ar_to_json(m.tgt)},
                {"f", graded_map_to_json(m.f)}};
}

ArMorphism ar_morphism_from_json(const json& j) {
    ArMorphism m;
    m.src = ar_from_json(need(j, "src"));
    m.tgt = ar_from_json(need(j, "tgt"));
    m.f = graded_map_from_json(need(j, "f"), m.src.N, m.tgt.N, 0);
    return m;
}

json contr_morphism_to_json(const ContrMorphism& m) {
    return json{{"src", sdr_to_json(m.src)},
                {"tgt", sdr_to_json(m.tgt)},
                {"f", graded_map_to_json(m.f)}};
}

ContrMorphism contr_morphism_from_json(const json& j) {
    ContrMorphism m;
    m.src = sdr_from_json(need(j, "src"));
    m.tgt = sdr_from_json(need(j, "tgt"));
    m.f = graded_map_from_json(need(j, "f"), m.src.ar.N, m.tgt.ar.N, 0);
    return m;
}

json coch_square_to_json(const LiftingProblem& p) {
    return json{{"A", complex_to_json(p.i.src())}, {"B", complex_to_json(p.i.tgt())},
                {"X", complex_to_json(p.f.tgt())}, {"Y", complex_to_json(p.p.tgt())},
                {"i", graded_map_to_json(p.i)},    {"f", graded_map_to_json(p.f)},
                {"p", graded_map_to_json(p.p)},    {"g", graded_map_to_json(p.g)}};
}

LiftingProblem coch_square_from_json(const json& j) {
    Complex a = complex_from_json(need(j, "A"));
    Complex b = complex_from_json(need(j, "B"));
    Complex x = complex_from_json(need(j, "X"));
    Complex y = complex_from_json(need(j, "Y"));
    LiftingProblem p;
    p.i = graded_map_from_json(need(j, "i"), a, b, 0);
    p.f = graded_map_from_json(need(j, "f"), a, x, 0);
    p.p = graded_map_from_json(need(j, "p"), x, y, 0);
    p.g = graded_map_from_json(need(j, "g"), b, y, 0);
    return p;
}

json ar_square_to_json(const ArLiftingProblem& p) {
    return json{{"A", ar_to_json(p.i.src)}, {"B", ar_to_json(p.i.tgt)},
                {"X", ar_to_json(p.f.tgt)}, {"Y", ar_to_json(p.p.tgt)},
                {"i", graded_map_to_json(p.i.f)}, {"f", graded_map_to_json(p.f.f)},
                {"p", graded_map_to_json(p.p.f)}, {"g", graded_map_to_json(p.g.f)}};
}

ArLiftingProblem ar_square_from_json(const json& j) {
    AcyclicRetraction a = ar_from_json(need(j, "A"));
    AcyclicRetraction b = ar_from_json(need(j, "B"));
    AcyclicRetraction x = ar_from_json(need(j, "X"));
    AcyclicRetraction y = ar_from_json(need(j, "Y"));
    ArLiftingProblem p;
    p.i = ArMorphism{a, b, graded_map_from_json(need(j, "i"), a.N, b.N, 0)};
    p.f = ArMorphism{a, x, graded_map_from_json(need(j, "f"), a.N, x.N, 0)};
    p.p = ArMorphism{x, y, graded_map_from_json(need(j, "p"), x.N, y.N, 0)};
    p.g = ArMorphism{b, y, graded_map_from_json(need(j, "g"), b.N, y.N, 0)};
    return p;
}

json contr_square_to_json(const ContrLiftingProblem& p) {
    return json{{"A", sdr_to_json(p.i.src)}, {"B", sdr_to_json(p.i.tgt)},
                {"X", sdr_to_json(p.f.tgt)}, {"Y", sdr_to_json(p.p.tgt)},
                {"i", graded_map_to_json(p.i.f)}, {"f", graded_map_to_json(p.f.f)},
                {"p", graded_map_to_json(p.p.f)}, {"g", graded_map_to_json(p.g.f)}};
}

ContrLiftingProblem contr_square_from_json(const json& j) {
    Sdr a = sdr_from_json(need(j, "A"));
    Sdr b = sdr_from_json(need(j, "B"));
    Sdr x = sdr_from_json(need(j, "X"));
    Sdr y = sdr_from_json(need(j, "Y"));
    ContrLiftingProblem p;
    p.i = ContrMorphism{a, b, graded_map_from_json(need(j, "i"), a.ar.N, b.ar.N, 0)};
    p.f = ContrMorphism{a, x, graded_map_from_json(need(j, "f"), a.ar.N, x.ar.N, 0)};
    p.p = ContrMorphism{x, y, graded_map_from_json(need(j, "p"), x.ar.N, y.ar.N, 0)};
    p.g = ContrMorphism{b, y, graded_map_from_json(need(j, "g"), b.ar.N, y.ar.N, 0)};
    return p;
}

json cells_to_json(const SemifreeExtension& s) {
    json stages = json::array();
    for (const auto& st : s.stages) {
        json stage = json::object();
        for (const auto& [deg, gens] : st.gens) {
            stage[std::to_string(deg)] = json{{"gens", matrix_to_json(gens)},
                                              {"d_gens", matrix_to_json(st.d_gens.at(deg))}};
        }
        stages.push_back(std::move(stage));
    }
    return json{{"stages", std::move(stages)}};
}

SemifreeExtension cells_from_json(const json& j, const GradedMap& f) {
    SemifreeExtension s;
    s.f = f;
    const json& stages = need(j, "stages");
    if (!stages.is_array()) throw ParseError("stages must be an array");
    for (const auto& stage : stages) {
        SemifreeStage st;
        for (auto it = stage.begin(); it != stage.end(); ++it) {
            int deg;
            try {
                deg = std::stoi(it.key());
            } catch (const std::exception&) {
                throw ParseError("stage key \"" + it.key() + "\" is not a degree");
            }
            st.gens[deg] = matrix_from_json(need(it.value(), "gens"), f.src().field());
            st.d_gens[deg] = matrix_from_json(need(it.value(), "d_gens"), f.src().field());
        }
        s.stages.push_back(std::move(st));
    }
    return s;
}

}  // namespace coch
