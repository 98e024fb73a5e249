#include "pompeiu/multipoly.hpp"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pompeiu {

namespace {

int total_degree(const MultiPoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

void MultiPoly::add_term(const Exponents& e, double coef) {
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("MultiPoly::add_term: exponent vector has wrong length");
    for (int k : e)
        if (k < 0) throw std::invalid_argument("MultiPoly::add_term: negative exponent");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (coef != 0.0) terms_.emplace(e, coef);
    } else {
        it->second += coef;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double MultiPoly::coef(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
}

double MultiPoly::operator()(std::span<const double> x) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double prod = c;
        for (int v = 0; v < dim_; ++v) {
            double xv = x[v];
            for (int k = 0; k < e[v]; ++k) prod *= xv;
        }
        sum += prod;
    }
    return sum;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int td = total_degree(e);
        if (d < 0) d = td;
        if (td != d) return false;
    }
    return true;
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents de = e;
        de[var] -= 1;
        out.add_term(de, c * e[var]);
    }
    return out;
}

MultiPoly MultiPoly::laplacian() const {
    MultiPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        for (int v = 0; v < dim_; ++v) {
            if (e[v] < 2) continue;
            Exponents de = e;
            de[v] -= 2;
            out.add_term(de, c * e[v] * (e[v] - 1));
        }
    }
    return out;
}

void MultiPoly::gradient(std::span<const double> x, std::span<double> out) const {
    for (int v = 0; v < dim_; ++v) out[v] = 0.0;
    for (const auto& [e, c] : terms_) {
        for (int v = 0; v < dim_; ++v) {
            if (e[v] == 0) continue;
            double prod = c * e[v];
            for (int w = 0; w < dim_; ++w) {
                int p = (w == v) ? e[w] - 1 : e[w];
                double xw = x[w];
                for (int k = 0; k < p; ++k) prod *= xw;
            }
            out[v] += prod;
        }
    }
}

double MultiPoly::max_abs_coef() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

MultiPoly& MultiPoly::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("MultiPoly::operator+: dimension mismatch");
    MultiPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("MultiPoly::operator*: dimension mismatch");
    MultiPoly out(dim_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Exponents e = e1;
            for (int v = 0; v < dim_; ++v) e[v] += e2[v];
            out.add_term(e, c1 * c2);
        }
    return out;
}

void MultiPoly::write_text(std::ostream& os) const {
    os << "dim " << dim_ << " terms " << terms_.size() << "\n";
    os.precision(17);
    for (const auto& [e, c] : terms_) {
        for (int v = 0; v < dim_; ++v) os << e[v] << ' ';
        os << c << "\n";
    }
}

MultiPoly MultiPoly::read_text(std::istream& is) {
    std::string kw;
    int dim = 0;
    std::size_t nterms = 0;
    is >> kw >> dim;
    if (kw != "dim" || dim <= 0) throw std::runtime_error("MultiPoly::read_text: bad header");
    is >> kw >> nterms;
    if (kw != "terms") throw std::runtime_error("MultiPoly::read_text: bad header");
    MultiPoly out(dim);
    for (std::size_t i = 0; i < nterms; ++i) {
        Exponents e(dim);
        for (int v = 0; v < dim; ++v) is >> e[v];
        double c;
        is >> c;
        if (!is) throw std::runtime_error("MultiPoly::read_text: truncated term list");
        out.add_term(e, c);
    }
    return out;
}

double eval_with_powers(const MultiPoly& p, const double* powers, int stride) {
    double sum = 0.0;
    int dim = p.dim();
    for (const auto& [e, c] : p.terms()) {
        double prod = c;
        for (int v = 0; v < dim; ++v) prod *= powers[v * stride + e[v]];
        sum += prod;
    }
    return sum;
}

}  // namespace pompeiu
