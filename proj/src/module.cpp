#include "homcat/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homcat {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

bool Ring::is_unit(const Int& x) const {
    if (is_integers()) return x == 1 || x == -1;
    return gcd_int(x, modulus) == 1;
}

Int Ring::unit_inverse(const Int& x) const {
    if (is_integers()) {
        if (x == 1 || x == -1) return x;
        throw std::invalid_argument("not a unit in Z: " + x.str());
    }
    // extended Euclid
    Int a = ((x % modulus) + modulus) % modulus, b = modulus;
    Int s0 = 1, s1 = 0;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (a != 1) throw std::invalid_argument("not a unit mod " + modulus.str() + ": " + x.str());
    return ((s0 % modulus) + modulus) % modulus;
}

std::string Ring::to_string() const {
    return is_integers() ? "Z" : "Z/" + modulus.str();
}

bool is_prime_power(const Int& m) {
    if (m < 2) return false;
    Int p = 2, n = m;
    while (p * p <= n) {
        if (n % p == 0) break;
        ++p;
    }
    if (p * p > n) p = n;  // m itself is prime
    while (n % p == 0) n /= p;
    return n == 1;
}

int Module::rank() const {
    int r = 0;
    for (const auto& d : orders)
        if (d == 0) ++r;
    return r;
}

std::vector<Int> Module::torsion() const {
    std::vector<Int> t;
    for (const auto& d : orders)
        if (d != 0) t.push_back(d);
    return t;
}

bool Module::is_trivial() const { return orders.empty(); }

Int Module::torsion_size() const {
    Int n = 1;
    for (const auto& d : orders)
        if (d != 0) n *= d;
    return n;
}

Matrix Module::relations() const {
    int k = 0;
    for (const auto& d : orders)
        if (d != 0) ++k;
    Matrix r(gens(), k);
    int j = 0;
    for (int i = 0; i < gens(); ++i)
        if (orders[i] != 0) r(i, j++) = orders[i];
    return r;
}

Module Module::free(const Ring& r, int rank) {
    Module m{r, std::vector<Int>(rank, 0)};
    if (!r.is_integers())
        for (auto& d : m.orders) d = r.modulus;
    return m;
}

Module Module::direct_sum(const Module& a, const Module& b) {
    if (!(a.ring == b.ring)) throw std::invalid_argument("direct sum over different rings");
    Module m = a;
    m.orders.insert(m.orders.end(), b.orders.begin(), b.orders.end());
    return m;
}

std::string Module::to_string() const {
    if (orders.empty()) return "0";
    std::string out;
    int r = rank();
    if (r == 1) out = "Z";
    if (r > 1) out = "Z^" + std::to_string(r);
    for (const auto& d : orders) {
        if (d == 0) continue;
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

Module canonical_form(const Module& m) {
    SmithForm s = smith_normal_form(m.relations());
    Module out{m.ring, {}};
    int free = m.gens() - s.rank;
    for (int i = 0; i < free; ++i) out.orders.push_back(0);
    for (int i = 0; i < s.rank; ++i)
        if (s.d(i, i) != 1) out.orders.push_back(s.d(i, i));
    return out;
}

bool Hom::is_valid() const {
    if (mat.rows() != cod.gens() || mat.cols() != dom.gens()) return false;
    for (int j = 0; j < dom.gens(); ++j) {
        if (dom.orders[j] == 0) continue;
        Matrix col = mat.column(j);
        for (int i = 0; i < col.rows(); ++i) col(i, 0) *= dom.orders[j];
        if (!element_is_zero(cod, col)) return false;
    }
    return true;
}

Hom Hom::compose_after(const Hom& inner) const {
    if (!(inner.cod == dom)) throw std::invalid_argument("hom composition domain mismatch");
    return Hom{inner.dom, cod, mat * inner.mat};
}

Hom Hom::scaled(const Int& c) const {
    Hom h = *this;
    for (int i = 0; i < h.mat.rows(); ++i)
        for (int j = 0; j < h.mat.cols(); ++j) h.mat(i, j) *= c;
    return h;
}

bool Hom::is_zero_hom() const { return homs_equal(*this, Hom::zero(dom, cod)); }

bool element_is_zero(const Module& m, const Matrix& y) {
    Matrix rel = m.relations();
    if (rel.cols() == 0) return y.is_zero();
    Matrix x;
    return solve_integer(rel, y, x);
}

bool homs_equal(const Hom& a, const Hom& b) {
    if (!(a.dom == b.dom) || !(a.cod == b.cod)) return false;
    Matrix diff = a.mat - b.mat;
    for (int j = 0; j < diff.cols(); ++j)
        if (!element_is_zero(a.cod, diff.column(j))) return false;
    return true;
}

bool hom_is_identity(const Hom& a) {
    return a.dom == a.cod && homs_equal(a, Hom::identity(a.dom));
}

namespace {

// Core subquotient presentation. Given generator columns S living in an
// ambient coordinate space and a lattice T of ambient vectors regarded
// as zero (with col(T) inside the span of S), computes the canonical
// form of span(S)/span(T) along with:
//   to_ambient: abstract generator -> ambient coordinates
//   from_span_coords: S-coefficient vector -> abstract coordinates
struct Presented {
    Module module;
    Matrix to_ambient;
    Matrix from_span_coords;
};

Presented present_subquotient(const Ring& ring, const Matrix& s, const Matrix& t) {
    const int k = s.cols();
    // Relations among the generators: {w : S w lies in col(T)}.
    Matrix rel;
    if (k == 0) {
        rel = Matrix(0, 0);
    } else {
        Matrix full = integer_kernel(s.hconcat(t));
        rel = full.row_block(0, k);
    }
    SmithForm snf = smith_normal_form(rel);
    // New coordinates y = U w; generator i has order D(i,i) (0 past rank).
    std::vector<int> keep;
    std::vector<Int> orders;
    for (int i = snf.rank; i < k; ++i) {  // free generators first
        keep.push_back(i);
        orders.push_back(0);
    }
    for (int i = 0; i < snf.rank; ++i) {
        if (snf.d(i, i) == 1) continue;
        keep.push_back(i);
        orders.push_back(snf.d(i, i));
    }
    Module mod{ring, orders};
    Matrix gen_cols = s * snf.u_inv;  // column i = ambient image of y-generator i
    Matrix to_ambient(s.rows(), static_cast<int>(keep.size()));
    Matrix from_span(static_cast<int>(keep.size()), k);
    for (size_t a = 0; a < keep.size(); ++a) {
        for (int r = 0; r < s.rows(); ++r) to_ambient(r, static_cast<int>(a)) = gen_cols(r, keep[a]);
        for (int c = 0; c < k; ++c) from_span(static_cast<int>(a), c) = snf.u(keep[a], c);
    }
    return Presented{std::move(mod), std::move(to_ambient), std::move(from_span)};
}

void require_valid(const Hom& h, const char* what) {
    if (!h.is_valid()) throw std::invalid_argument(std::string(what) + ": hom does not respect torsion relations");
}

}  // namespace

SubQuotient kernel(const Hom& h) {
    require_valid(h, "kernel");
    const int n = h.dom.gens();
    Matrix rel_cod = h.cod.relations();
    Matrix s;
    if (n == 0) {
        s = Matrix(0, 0);
    } else {
        Matrix full = integer_kernel(h.mat.hconcat(rel_cod));
        s = full.row_block(0, n);
    }
    Presented p = present_subquotient(h.dom.ring, s, h.dom.relations());
    return SubQuotient{p.module, Hom{p.module, h.dom, p.to_ambient}};
}

SubQuotient image(const Hom& h) {
    require_valid(h, "image");
    Presented p = present_subquotient(h.dom.ring, h.mat, h.cod.relations());
    return SubQuotient{p.module, Hom{p.module, h.cod, p.to_ambient}};
}

SubQuotient cokernel(const Hom& h) {
    require_valid(h, "cokernel");
    const int m = h.cod.gens();
    Matrix zero_lattice = h.mat.hconcat(h.cod.relations());
    Presented p = present_subquotient(h.cod.ring, Matrix::identity(m), zero_lattice);
    // from_span_coords is exactly the projection cod -> quotient here.
    return SubQuotient{p.module, Hom{h.cod, p.module, p.from_span_coords}};
}

Module complex_cohomology(const Hom& d_prev, const Hom& d_next) {
    if (!(d_prev.cod == d_next.dom)) throw std::invalid_argument("complex middle module mismatch");
    Hom comp = d_next.compose_after(d_prev);
    if (!comp.is_zero_hom()) {
        for (int j = 0; j < comp.mat.cols(); ++j)
            if (!element_is_zero(comp.cod, comp.mat.column(j)))
                throw std::invalid_argument(
                    "d o d != 0; witness generator " + std::to_string(j) + " maps to " +
                    comp.mat.column(j).to_string());
    }
    SubQuotient ker = kernel(d_next);
    // Quotient the kernel lattice by im(d_prev) + relations of the middle module.
    Matrix zero_lattice = d_prev.mat.hconcat(d_next.dom.relations());
    Presented p = present_subquotient(d_next.dom.ring, ker.map.mat, zero_lattice);
    return p.module;
}

SubQuotient fixed_submodule(const Module& m, const std::vector<Hom>& gens) {
    const int n = m.gens();
    for (const auto& g : gens) {
        if (!(g.dom == m) || !(g.cod == m)) throw std::invalid_argument("fixed_submodule: generator endpoints");
        if (!is_automorphism(g)) throw std::invalid_argument("fixed_submodule: generator is not an automorphism");
    }
    if (gens.empty()) {
        // No conditions: the fixed submodule is all of m.
        Presented p = present_subquotient(m.ring, Matrix::identity(n), m.relations());
        return SubQuotient{p.module, Hom{p.module, m, p.to_ambient}};
    }
    Matrix stacked(0, n);
    for (const auto& g : gens) {
        stacked = stacked.rows() == 0 ? (g.mat - Matrix::identity(n))
                                      : stacked.vconcat(g.mat - Matrix::identity(n));
    }
    // Zero lattice in the stacked codomain: block diagonal of cod relations.
    Matrix rel = m.relations();
    int k = static_cast<int>(gens.size());
    Matrix block(k * n, k * rel.cols());
    for (int b = 0; b < k; ++b)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < rel.cols(); ++j) block(b * n + i, b * rel.cols() + j) = rel(i, j);
    Matrix full = integer_kernel(stacked.hconcat(block));
    Matrix s = full.row_block(0, n);
    Presented p = present_subquotient(m.ring, s, m.relations());
    return SubQuotient{p.module, Hom{p.module, m, p.to_ambient}};
}

std::optional<Matrix> preimage(const Hom& h, const Matrix& v) {
    Matrix sys = h.mat.hconcat(h.cod.relations());
    Matrix x;
    if (!solve_integer(sys, v, x)) return std::nullopt;
    return x.row_block(0, h.dom.gens());
}

bool is_automorphism(const Hom& h) {
    if (!h.is_valid()) return false;
    if (!(canonical_form(h.dom) == canonical_form(h.cod))) return false;
    return kernel(h).module.is_trivial() && cokernel(h).module.is_trivial();
}

Module parse_module_literal(const std::string& text, const Ring& ring) {
    Module m{ring, {}};
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == '+') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("empty term in module literal '" + text + "'");
        if (p == "0") continue;
        if (p == "Z") {
            if (!ring.is_integers()) throw std::invalid_argument("free Z summand over modular ring");
            m.orders.push_back(0);
        } else if (p.rfind("Z^", 0) == 0) {
            if (!ring.is_integers()) throw std::invalid_argument("free Z summand over modular ring");
            int r = std::stoi(p.substr(2));
            if (r < 0) throw std::invalid_argument("negative rank in module literal");
            for (int i = 0; i < r; ++i) m.orders.push_back(0);
        } else if (p.rfind("Z/", 0) == 0) {
            Int d(p.substr(2));
            if (d < 2) throw std::invalid_argument("torsion order must be >= 2 in '" + text + "'");
            if (!ring.is_integers() && ring.modulus % d != 0)
                throw std::invalid_argument("torsion order " + d.str() + " does not divide ring modulus");
            m.orders.push_back(d);
        } else {
            throw std::invalid_argument("bad module literal term '" + p + "'");
        }
    }
    return m;
}

}  // namespace homcat
