#include "wharf/algebra/spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wharf {

using ordered_json = nlohmann::ordered_json;

AlgebraElement WhaSpec::mul(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement out(n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == cplx(0, 0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx c = x[i] * y[j];
            if (c == cplx(0, 0)) continue;
            const cplx* row = &mult[(i * n + j) * n];
            for (std::size_t k = 0; k < n; ++k) out[k] += c * row[k];
        }
    }
    return out;
}

AlgebraElement WhaSpec::star_of(const AlgebraElement& x) const {
    AlgebraElement out(n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const cplx c = std::conj(x[i]);
        if (c == cplx(0, 0)) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] += star(j, i) * c;
    }
    return out;
}

AlgebraElement WhaSpec::antipode_of(const AlgebraElement& x) const {
    AlgebraElement out(n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == cplx(0, 0)) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] += antipode(j, i) * x[i];
    }
    return out;
}

AlgebraElement WhaSpec::basis_el(std::size_t i) const {
    AlgebraElement out(n, cplx(0, 0));
    out[i] = 1.0;
    return out;
}

CMatrix WhaSpec::delta(const AlgebraElement& x) const {
    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == cplx(0, 0)) continue;
        const cplx* blk = &coprod[i * n * n];
        for (std::size_t ab = 0; ab < n * n; ++ab) out.data[ab] += x[i] * blk[ab];
    }
    return out;
}

CMatrix WhaSpec::phi(const AlgebraElement& x) const {
    CMatrix out(rep_dim, rep_dim);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == cplx(0, 0)) continue;
        for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] += x[i] * rep[i].data[k];
    }
    return out;
}

cplx dot(const Functional& f, const AlgebraElement& x) {
    cplx s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
    return s;
}

void WhaSpec::validate_shape(double tol) const {
    auto fail = [](const std::string& msg) { throw std::runtime_error("spec invalid: " + msg); };
    if (n == 0) fail("empty algebra");
    if (basis.size() != n) fail("basis label count");
    if (mult.size() != n * n * n || coprod.size() != n * n * n) fail("tensor sizes");
    if (unit.size() != n || counit.size() != n) fail("unit/counit size");
    if (star.rows != n || star.cols != n || antipode.rows != n || antipode.cols != n)
        fail("star/antipode shape");
    if (rep.size() != n || rep_dim == 0) fail("representation size");
    for (const auto& m : rep)
        if (m.rows != rep_dim || m.cols != rep_dim) fail("rep matrix shape");
    // unit is a two-sided identity
    for (std::size_t i = 0; i < n; ++i) {
        auto e = basis_el(i);
        if (max_abs_diff_vec(mul(unit, e), e) > 1e-12 || max_abs_diff_vec(mul(e, unit), e) > 1e-12)
            fail("unit not a two-sided identity");
    }
    // *-representation
    for (std::size_t i = 0; i < n; ++i) {
        CMatrix lhs = phi(star_of(basis_el(i)));
        if (max_abs_diff(lhs, rep[i].adjoint()) > tol) fail("phi is not a *-representation");
    }
    // faithfulness: stacked rep matrices have rank n
    CMatrix stack(rep_dim * rep_dim, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < rep_dim * rep_dim; ++k) stack(k, i) = rep[i].data[k];
    if (null_space(stack, tol).size() != 0) fail("phi not faithful");
}

double max_abs_diff_vec(const Vec& a, const Vec& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

namespace {

ordered_json cplx_pair(const cplx& v) { return ordered_json::array({v.real(), v.imag()}); }

cplx pair_cplx(const ordered_json& j) { return cplx(j.at(0).get<double>(), j.at(1).get<double>()); }

ordered_json triplets3(const Vec& t, std::size_t n) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const cplx v = t[(i * n + j) * n + k];
                if (v != cplx(0, 0))
                    out.push_back(ordered_json::array({i, j, k, v.real(), v.imag()}));
            }
    return out;
}

ordered_json triplets2(const CMatrix& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m(i, j) != cplx(0, 0))
                out.push_back(ordered_json::array({i, j, m(i, j).real(), m(i, j).imag()}));
    return out;
}

ordered_json vec_json(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& c : v) out.push_back(cplx_pair(c));
    return out;
}

Vec json_vec(const ordered_json& j) {
    Vec out;
    for (const auto& p : j) out.push_back(pair_cplx(p));
    return out;
}

}  // namespace

std::string spec_to_json(const WhaSpec& spec) {
    ordered_json j;
    j["version"] = 1;
    j["n"] = spec.n;
    j["basis"] = spec.basis;
    j["mult"] = triplets3(spec.mult, spec.n);
    j["unit"] = vec_json(spec.unit);
    j["star"] = triplets2(spec.star);
    j["coproduct"] = triplets3(spec.coprod, spec.n);
    j["counit"] = vec_json(spec.counit);
    j["antipode"] = triplets2(spec.antipode);
    ordered_json rep;
    rep["dim"] = spec.rep_dim;
    ordered_json mats = ordered_json::array();
    for (const auto& m : spec.rep) {
        ordered_json rowsj = ordered_json::array();
        for (std::size_t i = 0; i < m.rows; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t jx = 0; jx < m.cols; ++jx) row.push_back(cplx_pair(m(i, jx)));
            rowsj.push_back(row);
        }
        mats.push_back(rowsj);
    }
    rep["matrices"] = mats;
    j["rep"] = rep;
    return j.dump(1) + "\n";
}

WhaSpec spec_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("spec parse error: ") + e.what());
    }
    WhaSpec s;
    try {
        s.n = j.at("n").get<std::size_t>();
        s.basis = j.at("basis").get<std::vector<std::string>>();
        const std::size_t n = s.n;
        s.mult.assign(n * n * n, cplx(0, 0));
        for (const auto& t : j.at("mult")) {
            const std::size_t i = t.at(0), jj = t.at(1), k = t.at(2);
            if (i >= n || jj >= n || k >= n) throw std::runtime_error("mult index out of range");
            s.mult[(i * n + jj) * n + k] = cplx(t.at(3).get<double>(), t.at(4).get<double>());
        }
        s.unit = json_vec(j.at("unit"));
        s.star = CMatrix(n, n);
        for (const auto& t : j.at("star"))
            s.star(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>()) =
                cplx(t.at(2).get<double>(), t.at(3).get<double>());
        s.coprod.assign(n * n * n, cplx(0, 0));
        for (const auto& t : j.at("coproduct")) {
            const std::size_t i = t.at(0), a = t.at(1), b = t.at(2);
            if (i >= n || a >= n || b >= n) throw std::runtime_error("coproduct index out of range");
            s.coprod[(i * n + a) * n + b] = cplx(t.at(3).get<double>(), t.at(4).get<double>());
        }
        s.counit = json_vec(j.at("counit"));
        s.antipode = CMatrix(n, n);
        for (const auto& t : j.at("antipode"))
            s.antipode(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>()) =
                cplx(t.at(2).get<double>(), t.at(3).get<double>());
        s.rep_dim = j.at("rep").at("dim").get<std::size_t>();
        for (const auto& mj : j.at("rep").at("matrices")) {
            CMatrix m(s.rep_dim, s.rep_dim);
            std::size_t i = 0;
            for (const auto& row : mj) {
                std::size_t c = 0;
                for (const auto& p : row) m(i, c++) = pair_cplx(p);
                ++i;
            }
            s.rep.push_back(std::move(m));
        }
        if (s.unit.size() != n || s.counit.size() != n || s.rep.size() != n)
            throw std::runtime_error("dimension mismatch");
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("spec parse error: ") + e.what());
    }
    s.validate_shape();
    return s;
}

WhaSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return spec_from_json(ss.str());
}

void save_spec(const WhaSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write spec file: " + path);
    out << spec_to_json(spec);
}

}  // namespace wharf
