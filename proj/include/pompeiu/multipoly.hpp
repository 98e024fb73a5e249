#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pompeiu {

/// Polynomial on R^d stored as a multi-index -> coefficient map.  The
/// representation is exact under formal differentiation, which is what the
/// Cartan-polynomial and harmonic-basis validations rely on.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int dim) : dim_(dim) {}

    int dim() const { return dim_; }

    /// Adds coef * x^e, merging with an existing term; exact-zero results are
    /// dropped so term_count() reflects the support.
    void add_term(const Exponents& e, double coef);

    double coef(const Exponents& e) const;
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::map<Exponents, double>& terms() const { return terms_; }

    double operator()(std::span<const double> x) const;

    /// Total degree of the highest term (-1 for the zero polynomial).
    int degree() const;
    bool is_homogeneous() const;

    MultiPoly partial(int var) const;
    MultiPoly laplacian() const;
    void gradient(std::span<const double> x, std::span<double> out) const;

    double max_abs_coef() const;

    MultiPoly& operator*=(double s);
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;

    /// One term per line: the exponent vector followed by the coefficient.
    void write_text(std::ostream& os) const;
    static MultiPoly read_text(std::istream& is);

private:
    int dim_ = 0;
    std::map<Exponents, double> terms_;
};

/// x^e with every variable raised from a precomputed power table
/// (powers[v * stride + k] == x_v^k).  Used by the Monte Carlo hot loops.
double eval_with_powers(const MultiPoly& p, const double* powers, int stride);

}  // namespace pompeiu
