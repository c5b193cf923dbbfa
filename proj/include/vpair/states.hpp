#ifndef VPAIR_STATES_HPP
#define VPAIR_STATES_HPP

#include "vpair/algebra.hpp"

#include <string>

namespace vpair {

enum class DickeParity { Sym, Anti };

// Pure-state vectors (unit norm, lexicographic basis).
Vec9 basis_ket(int j, int k);
Vec9 bell_ket(int alpha);                              // alpha in 1..9
Vec9 dicke_ket(DickeParity parity, int k, int l);      // k < l
Vec9 superposition_ket(double phi);                    // phi in [0, pi/2]

// Projectors onto the kets above plus the two mixed reference states.
DensityMatrix product_state(int j, int k);
DensityMatrix bell_state(int alpha);
DensityMatrix dicke_state(DickeParity parity, int k, int l);
DensityMatrix superposition_state(double phi);

// Relaxation endpoint of the second Bell state in the small-separation
// regime (equal 1/6 populations in all three antisymmetric Dicke states).
DensityMatrix asymptotic_psi2_state();

// Relaxation endpoint of |a12>: the even mixture of |a13> and |a23>.
DensityMatrix asymptotic_a12_state();

// Canonical string form used by CLI configs and CSV metadata:
//   product:J:K | bell:ALPHA | dicke:sym:K:L | dicke:anti:K:L |
//   superposition:PHI | asymptotic:psi2 | asymptotic:a12
struct StateLabel {
    enum class Kind { Product, Bell, DickeSym, DickeAnti, Superposition,
                      AsymptoticPsi2, AsymptoticA12 };

    Kind kind;
    int i = 0;       // first level index / bell alpha
    int j = 0;       // second level index
    double phi = 0;  // superposition angle

    static StateLabel parse(const std::string& text);  // throws ConfigError
    std::string str() const;
    DensityMatrix make() const;
};

}  // namespace vpair

#endif
