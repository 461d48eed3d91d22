#include "leonard/matrix.hpp"

#include <sstream>

namespace leonard {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw Error(msg);
}

} // namespace

Vector::Vector(std::size_t n, const FieldSpec& f) : field_(f), entries_(n, field_zero(f)) {}

Vector::Vector(std::vector<FieldElement> entries, const FieldSpec& f)
    : field_(f), entries_(std::move(entries)) {
    for (const auto& x : entries_)
        require(x.field() == field_, "vector entry from wrong field");
}

bool Vector::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Vector::operator+(const Vector& o) const {
    require(size() == o.size() && field_ == o.field_, "vector shape/field mismatch");
    Vector r(size(), field_);
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries_[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    require(size() == o.size() && field_ == o.field_, "vector shape/field mismatch");
    Vector r(size(), field_);
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries_[i] - o[i];
    return r;
}

Vector Vector::scaled(const FieldElement& c) const {
    Vector r(size(), field_);
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries_[i] * c;
    return r;
}

bool Vector::operator==(const Vector& o) const {
    if (size() != o.size() || field_ != o.field_) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] != o[i]) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, field_zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field_one(f);
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, const FieldSpec& f) {
    return Matrix(rows, cols, f);
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows,
                         const FieldSpec& f) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c, f);
    std::size_t i = 0;
    for (const auto& row : rows) {
        require(row.size() == c, "ragged initializer");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = FieldElement::from_int(v, f);
        ++i;
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols) {
    require(!cols.empty(), "no columns");
    std::size_t n = cols[0].size();
    Matrix m(n, cols.size(), cols[0].field());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require(cols[j].size() == n && cols[j].field() == m.field(),
                "column shape/field mismatch");
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

const FieldElement& Matrix::at(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, "matrix index out of range");
    return e_[i * cols_ + j];
}

FieldElement& Matrix::at(std::size_t i, std::size_t j) {
    require(i < rows_ && j < cols_, "matrix index out of range");
    return e_[i * cols_ + j];
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_,
            "matrix shape/field mismatch in +");
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_,
            "matrix shape/field mismatch in -");
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_ && field_ == o.field_, "matrix shape/field mismatch in *");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = e_[i * cols_ + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.e_[i * o.cols_ + j] += aik * o.e_[k * o.cols_ + j];
        }
    }
    return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    require(c.field() == field_, "scalar from wrong field");
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    require(cols_ == v.size() && field_ == v.field(), "matrix/vector mismatch");
    Vector r(rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        FieldElement s = field_zero(field_);
        for (std::size_t j = 0; j < cols_; ++j) s += e_[i * cols_ + j] * v[j];
        r[i] = s;
    }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldElement Matrix::trace() const {
    require(rows_ == cols_, "trace of non-square matrix");
    FieldElement s = field_zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

Vector Matrix::column(std::size_t j) const {
    require(j < cols_, "column index out of range");
    Vector v(rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const {
    require(i < rows_, "row index out of range");
    Vector v(cols_, field_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

namespace {

// Reduced row echelon form of [M | rhs], in place.  First nonzero entry in
// each column is the pivot; pivot columns of M are recorded.
struct Rref {
    Matrix aug;
    std::vector<std::size_t> pivot_cols; // within M's columns
    std::size_t m_cols;
};

Rref rref_augmented(const Matrix& M, const Matrix& rhs) {
    std::size_t n = M.rows(), mc = M.cols(), rc = rhs.cols();
    Matrix aug(n, mc + rc, M.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < mc; ++j) aug.at(i, j) = M.at(i, j);
        for (std::size_t j = 0; j < rc; ++j) aug.at(i, mc + j) = rhs.at(i, j);
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < mc && row < n; ++col) {
        std::size_t p = row;
        while (p < n && aug.at(p, col).is_zero()) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t j = 0; j < mc + rc; ++j) std::swap(aug.at(p, j), aug.at(row, j));
        FieldElement inv = aug.at(row, col).inverse();
        for (std::size_t j = 0; j < mc + rc; ++j) aug.at(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            FieldElement f = aug.at(i, col);
            for (std::size_t j = 0; j < mc + rc; ++j)
                aug.at(i, j) -= f * aug.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{std::move(aug), std::move(pivots), mc};
}

} // namespace

LinearSolution solve(const Matrix& M, const Matrix& rhs) {
    require(M.rows() == rhs.rows(), "rhs row count mismatch");
    require(M.field() == rhs.field(), "rhs field mismatch");
    Rref r = rref_augmented(M, rhs);
    std::size_t n = M.rows(), mc = M.cols(), rc = rhs.cols();
    std::size_t rk = r.pivot_cols.size();

    LinearSolution out{true, rk, Matrix::zero(mc, rc, M.field()), {}};

    // rows past the rank must have zero rhs, else inconsistent
    for (std::size_t i = rk; i < n; ++i)
        for (std::size_t j = 0; j < rc; ++j)
            if (!r.aug.at(i, mc + j).is_zero()) out.consistent = false;

    if (out.consistent) {
        for (std::size_t k = 0; k < rk; ++k)
            for (std::size_t j = 0; j < rc; ++j)
                out.particular.at(r.pivot_cols[k], j) = r.aug.at(k, mc + j);
    }

    // null-space basis: one vector per free column
    std::vector<bool> is_pivot(mc, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < mc; ++free) {
        if (is_pivot[free]) continue;
        Vector v(mc, M.field());
        v[free] = field_one(M.field());
        for (std::size_t k = 0; k < rk; ++k)
            v[r.pivot_cols[k]] = -r.aug.at(k, free);
        out.null_basis.push_back(std::move(v));
    }
    return out;
}

LinearSolution solve(const Matrix& M, const Vector& rhs) {
    Matrix col(rhs.size(), 1, rhs.field());
    for (std::size_t i = 0; i < rhs.size(); ++i) col.at(i, 0) = rhs[i];
    return solve(M, col);
}

std::size_t rank(const Matrix& M) {
    return rref_augmented(M, Matrix::zero(M.rows(), 0, M.field())).pivot_cols.size();
}

std::vector<Vector> null_space(const Matrix& M) {
    return solve(M, Matrix::zero(M.rows(), 0, M.field())).null_basis;
}

Matrix inverse(const Matrix& M) {
    require(M.rows() == M.cols(), "inverse of non-square matrix");
    LinearSolution s = solve(M, Matrix::identity(M.rows(), M.field()));
    if (s.rank != M.rows()) throw Error("matrix is singular");
    return s.particular;
}

Matrix poly_eval_roots(std::span<const FieldElement> roots, const Matrix& X) {
    require(X.rows() == X.cols(), "polynomial of non-square matrix");
    Matrix acc = Matrix::identity(X.rows(), X.field());
    for (const auto& r : roots) {
        require(r.field() == X.field(), "root from wrong field");
        Matrix shift = X;
        for (std::size_t i = 0; i < X.rows(); ++i) shift.at(i, i) -= r;
        acc = acc * shift;
    }
    return acc;
}

Matrix poly_eval_coeffs(std::span<const FieldElement> coeffs, const Matrix& X) {
    require(X.rows() == X.cols(), "polynomial of non-square matrix");
    Matrix acc = Matrix::zero(X.rows(), X.rows(), X.field());
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * X;
        for (std::size_t i = 0; i < X.rows(); ++i) acc.at(i, i) += coeffs[k];
    }
    return acc;
}

FieldElement poly_eval_roots_scalar(std::span<const FieldElement> roots, const FieldElement& x) {
    FieldElement acc = field_one(x.field());
    for (const auto& r : roots) acc *= x - r;
    return acc;
}

bool is_basis(std::span<const Vector> vectors) {
    if (vectors.empty()) return false;
    std::size_t n = vectors[0].size();
    if (vectors.size() != n) return false;
    for (const auto& v : vectors)
        if (v.size() != n) throw Error("basis candidate length mismatch");
    return rank(Matrix::from_columns(vectors)) == n;
}

std::string format_matrix(const Matrix& M) {
    // column-aligned exact entries
    std::vector<std::string> cells(M.rows() * M.cols());
    std::vector<std::size_t> width(M.cols(), 0);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            cells[i * M.cols() + j] = format_element(M.at(i, j));
            width[j] = std::max(width[j], cells[i * M.cols() + j].size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const std::string& c = cells[i * M.cols() + j];
            os << std::string(width[j] - c.size(), ' ') << c
               << (j + 1 == M.cols() ? " ]" : "  ");
        }
        os << '\n';
    }
    return os.str();
}

} // namespace leonard
