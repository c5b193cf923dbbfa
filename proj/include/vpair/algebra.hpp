#ifndef VPAIR_ALGEBRA_HPP
#define VPAIR_ALGEBRA_HPP

#include <Eigen/Dense>

#include <complex>

namespace vpair {

using Complex = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Mat9 = Eigen::Matrix<Complex, 9, 9>;
using Vec9 = Eigen::Matrix<Complex, 9, 1>;
using Vec9d = Eigen::Matrix<double, 9, 1>;
// 81x81 superoperator acting on column-major vectorized 9x9 matrices.
// Kept dynamic: fixed-size 81x81 would not fit comfortably on the stack.
using Superoperator = Eigen::MatrixXcd;
using Vec81 = Eigen::VectorXcd;

enum class Atom { A, B };
enum class Subsystem { A, B };

// Product basis |j_A> x |k_B>, j,k in 1..3, lexicographic order.
// 1-based matrix position p = 3(j-1) + k; internally everything is the
// 0-based index below.  Mapping table:
//   p=1 |1,1>  p=2 |1,2>  p=3 |1,3>
//   p=4 |2,1>  p=5 |2,2>  p=6 |2,3>
//   p=7 |3,1>  p=8 |3,2>  p=9 |3,3>
constexpr int basis_index(int j, int k) { return 3 * (j - 1) + (k - 1); }

// sigma_jk = |j><k| on one atom (transition from |k> to |j>).
Mat3 sigma(int j, int k);

// sigma_jk on the named atom, embedded into the two-atom space:
// sigma x I for atom A, I x sigma for atom B.
Mat9 transition_operator(int j, int k, Atom atom);

Mat9 kron(const Mat3& a, const Mat3& b);

// Column-major vectorization: vec(m)(i + 9j) = m(i, j).  With this
// convention vec(A rho B) = (B^T kron A) vec(rho).
Vec81 vectorize(const Mat9& m);
Mat9 devectorize(const Vec81& v);

Mat9 partial_transpose(const Mat9& rho, Subsystem which);

// Eigenvalues of a Hermitian 9x9 matrix, ascending.  Rejects inputs whose
// hermiticity residual exceeds `herm_tol`.
Vec9d hermitian_eigenvalues(const Mat9& m, double herm_tol = 1e-8);

// 9x9 density matrix over the lexicographic product basis.  Construction
// through validated() enforces hermiticity, unit trace and positivity.
class DensityMatrix {
public:
    static constexpr double kHermTol = 1e-10;
    static constexpr double kTraceTol = 1e-8;
    static constexpr double kEigenFloor = -1e-8;

    // Throws InvariantError listing every violated invariant.
    static DensityMatrix validated(const Mat9& m);

    const Mat9& matrix() const { return m_; }
    Complex entry(int row0, int col0) const { return m_(row0, col0); }

private:
    explicit DensityMatrix(const Mat9& m) : m_(m) {}
    Mat9 m_;
};

double trace_distance(const Mat9& a, const Mat9& b);

// Consistency check of the frozen basis conventions (index map, operator
// action, vectorization identity, partial transpose).  Throws
// std::logic_error on any mismatch; meant to run once at startup.
void run_basis_self_test();

}  // namespace vpair

#endif
