#include "vpair/states.hpp"

#include "vpair/errors.hpp"
#include "vpair/format.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vpair {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt3 = 0.5773502691896257645;

void check_level(int v, const char* name) {
    if (v < 1 || v > 3)
        throw std::domain_error(std::string(name) + " must be in 1..3, got " +
                                std::to_string(v));
}

DensityMatrix projector(const Vec9& ket) {
    const Mat9 m = ket * ket.adjoint();
    return DensityMatrix::validated(m);
}

}  // namespace

Vec9 basis_ket(int j, int k) {
    check_level(j, "j");
    check_level(k, "k");
    Vec9 v = Vec9::Zero();
    v(basis_index(j, k)) = 1.0;
    return v;
}

Vec9 bell_ket(int alpha) {
    if (alpha < 1 || alpha > 9)
        throw std::domain_error("bell index must be in 1..9, got " +
                                std::to_string(alpha));
    // alpha = 3*p + s + 1 with cyclic shift s in 0..2 and phase p in 0..2:
    //   |Psi> = (|1, 1+s> + w^q |2, 2+s> + conj(w)^q |3, 3+s>) / sqrt(3),
    // q = 0, 1, 2 for p = 0, 1, 2 and w = exp(2*pi*i/3).
    const int s = (alpha - 1) % 3;
    const int p = (alpha - 1) / 3;
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    Complex ph2, ph3;
    switch (p) {
        case 0: ph2 = 1.0; ph3 = 1.0; break;
        case 1: ph2 = w; ph3 = std::conj(w); break;
        default: ph2 = std::conj(w); ph3 = w; break;
    }
    Vec9 v = Vec9::Zero();
    auto wrap = [](int x) { return (x - 1) % 3 + 1; };
    v(basis_index(1, wrap(1 + s))) = kInvSqrt3;
    v(basis_index(2, wrap(2 + s))) = ph2 * kInvSqrt3;
    v(basis_index(3, wrap(3 + s))) = ph3 * kInvSqrt3;
    return v;
}

Vec9 dicke_ket(DickeParity parity, int k, int l) {
    check_level(k, "k");
    check_level(l, "l");
    if (!(k < l))
        throw std::domain_error("dicke state requires k < l, got k = " +
                                std::to_string(k) + ", l = " + std::to_string(l));
    const double sign = parity == DickeParity::Sym ? 1.0 : -1.0;
    Vec9 v = Vec9::Zero();
    v(basis_index(k, l)) = kInvSqrt2;
    v(basis_index(l, k)) = sign * kInvSqrt2;
    return v;
}

Vec9 superposition_ket(double phi) {
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0))
        throw std::domain_error("superposition angle must be in [0, pi/2], got " +
                                std::to_string(phi));
    Vec9 v = Vec9::Zero();
    v(basis_index(1, 1)) = std::cos(phi);
    v(basis_index(1, 3)) = std::sin(phi);
    return v;
}

DensityMatrix product_state(int j, int k) { return projector(basis_ket(j, k)); }
DensityMatrix bell_state(int alpha) { return projector(bell_ket(alpha)); }
DensityMatrix dicke_state(DickeParity parity, int k, int l) {
    return projector(dicke_ket(parity, k, l));
}
DensityMatrix superposition_state(double phi) {
    return projector(superposition_ket(phi));
}

DensityMatrix asymptotic_psi2_state() {
    // 1-based (row, col, value); Hermitian completion implied.  Diagonal
    // 4 x 1/8 + 1/2, single-excitation coherences +-1/8 and +-1/12, ground
    // coherences +-1/12.
    const double e = 1.0 / 8.0, t = 1.0 / 12.0;
    struct Entry { int r, c; double v; };
    const std::vector<Entry> upper = {
        {3, 3, e},  {3, 6, -t}, {3, 7, -e}, {3, 8, t},  {3, 9, t},
        {6, 6, e},  {6, 7, t},  {6, 8, -e}, {6, 9, -t},
        {7, 7, e},  {7, 8, -t}, {7, 9, -t},
        {8, 8, e},  {8, 9, t},
        {9, 9, 0.5},
    };
    Mat9 m = Mat9::Zero();
    for (const auto& en : upper) {
        m(en.r - 1, en.c - 1) = en.v;
        m(en.c - 1, en.r - 1) = en.v;
    }
    return DensityMatrix::validated(m);
}

DensityMatrix asymptotic_a12_state() {
    // Even mixture of |a13> and |a23>: rho33 = rho66 = rho77 = rho88 = 1/4,
    // rho37 = rho68 = -1/4, everything else zero.
    Mat9 m = Mat9::Zero();
    const int i3 = basis_index(1, 3), i6 = basis_index(2, 3);
    const int i7 = basis_index(3, 1), i8 = basis_index(3, 2);
    m(i3, i3) = m(i6, i6) = m(i7, i7) = m(i8, i8) = 0.25;
    m(i3, i7) = m(i7, i3) = -0.25;
    m(i6, i8) = m(i8, i6) = -0.25;
    return DensityMatrix::validated(m);
}

StateLabel StateLabel::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);

    auto as_int = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("bad state label '" + text +
                              "': expected integer, got '" + s + "'");
        }
    };
    auto as_double = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("bad state label '" + text +
                              "': expected number, got '" + s + "'");
        }
    };

    StateLabel lab{};
    const std::string& head = parts[0];
    if (head == "product" && parts.size() == 3) {
        lab.kind = Kind::Product;
        lab.i = as_int(parts[1]);
        lab.j = as_int(parts[2]);
    } else if (head == "bell" && parts.size() == 2) {
        lab.kind = Kind::Bell;
        lab.i = as_int(parts[1]);
    } else if (head == "dicke" && parts.size() == 4 &&
               (parts[1] == "sym" || parts[1] == "anti")) {
        lab.kind = parts[1] == "sym" ? Kind::DickeSym : Kind::DickeAnti;
        lab.i = as_int(parts[2]);
        lab.j = as_int(parts[3]);
    } else if (head == "superposition" && parts.size() == 2) {
        lab.kind = Kind::Superposition;
        lab.phi = as_double(parts[1]);
    } else if (head == "asymptotic" && parts.size() == 2 && parts[1] == "psi2") {
        lab.kind = Kind::AsymptoticPsi2;
    } else if (head == "asymptotic" && parts.size() == 2 && parts[1] == "a12") {
        lab.kind = Kind::AsymptoticA12;
    } else {
        throw ConfigError("unrecognized state label '" + text + "'");
    }
    return lab;
}

std::string StateLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Product:
            os << "product:" << i << ":" << j;
            break;
        case Kind::Bell:
            os << "bell:" << i;
            break;
        case Kind::DickeSym:
            os << "dicke:sym:" << i << ":" << j;
            break;
        case Kind::DickeAnti:
            os << "dicke:anti:" << i << ":" << j;
            break;
        case Kind::Superposition:
            os << "superposition:" << format_double_exact(phi);
            break;
        case Kind::AsymptoticPsi2:
            os << "asymptotic:psi2";
            break;
        case Kind::AsymptoticA12:
            os << "asymptotic:a12";
            break;
    }
    return os.str();
}

DensityMatrix StateLabel::make() const {
    try {
        switch (kind) {
            case Kind::Product: return product_state(i, j);
            case Kind::Bell: return bell_state(i);
            case Kind::DickeSym: return dicke_state(DickeParity::Sym, i, j);
            case Kind::DickeAnti: return dicke_state(DickeParity::Anti, i, j);
            case Kind::Superposition: return superposition_state(phi);
            case Kind::AsymptoticPsi2: return asymptotic_psi2_state();
            case Kind::AsymptoticA12: return asymptotic_a12_state();
        }
    } catch (const std::domain_error& e) {
        throw ConfigError("state label '" + str() + "': " + e.what());
    }
    throw ConfigError("state label '" + str() + "': unknown kind");
}

}  // namespace vpair
