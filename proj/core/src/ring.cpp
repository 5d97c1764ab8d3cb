#include "intertwine/ring.hpp"

#include <algorithm>

#include "intertwine/error.hpp"

namespace intertwine {

std::size_t IdealBasis::total_dimension() const {
  std::size_t n = 0;
  for (const auto& d : degrees) n += d.size();
  return n;
}

TensorPower tensor_power(const GradedAlgebra& a, std::size_t m) {
  if (m == 0) throw DomainError("tensor power needs m >= 1");
  TensorPower power{a, 1, {}};
  for (std::size_t g = 0; g < a.total_dimension(); ++g) power.factors.push_back({g});
  for (std::size_t k = 2; k <= m; ++k) {
    GradedAlgebra next = tensor_product(power.algebra, a);
    // Same basis order as tensor_product: per degree, by (global in left, global in right).
    std::vector<std::vector<std::size_t>> factors(next.total_dimension());
    std::vector<std::size_t> filled(next.top_degree() + 1, 0);
    for (std::size_t gl = 0; gl < power.algebra.total_dimension(); ++gl) {
      for (std::size_t gr = 0; gr < a.total_dimension(); ++gr) {
        const std::size_t d = power.algebra.ref_of(gl).degree + a.ref_of(gr).degree;
        std::vector<std::size_t> tuple = power.factors[gl];
        tuple.push_back(gr);
        factors[next.global_index({d, filled[d]++})] = std::move(tuple);
      }
    }
    power.algebra = std::move(next);
    power.factors = std::move(factors);
    power.m = k;
  }
  power.algebra.set_name(a.name() + "^" + std::to_string(m));
  return power;
}

Element multiply_factors(const GradedAlgebra& a, const std::vector<std::size_t>& factors) {
  Element product = a.unit();
  for (std::size_t g : factors) {
    product = a.multiply(product, a.basis(a.ref_of(g)));
    if (product.coefficients.empty()) break;
  }
  return product;
}

DiagonalKernel diagonal_kernel(const GradedAlgebra& a, std::size_t m) {
  if (m < 2) throw DomainError("diagonal kernel needs m >= 2");
  DiagonalKernel out{tensor_power(a, m), {}, {}};
  const GradedAlgebra& p = out.power.algebra;
  const FieldSpec& field = a.field();
  out.kernel.degrees.resize(p.top_degree() + 1);
  for (std::size_t d = 0; d <= p.top_degree(); ++d) {
    Matrix mu(a.dimension(d), p.dimension(d));
    for (std::size_t i = 0; i < p.dimension(d); ++i) {
      Element image = multiply_factors(a, out.power.factors[p.global_index({d, i})]);
      for (std::size_t r = 0; r < image.coefficients.size() && r < mu.rows(); ++r) mu(r, i) = image.coefficients[r];
    }
    if (mu.rows() == 0) {
      for (std::size_t i = 0; i < p.dimension(d); ++i) out.kernel.degrees[d].push_back(p.basis({d, i}).coefficients);
    } else {
      out.kernel.degrees[d] = null_space(field, mu);
    }
    out.multiplication.push_back(std::move(mu));
  }
  return out;
}

bool is_ideal(const GradedAlgebra& algebra, const IdealBasis& ideal) {
  const FieldSpec& field = algebra.field();
  for (std::size_t d = 0; d < ideal.degrees.size(); ++d) {
    for (const Vector& v : ideal.degrees[d]) {
      Element k{d, v};
      for (std::size_t g = 0; g < algebra.total_dimension(); ++g) {
        Element prod = algebra.multiply(algebra.basis(algebra.ref_of(g)), k);
        if (prod.coefficients.empty() || prod.is_zero()) continue;
        if (ideal.dimension(prod.degree) == 0) return false;
        Matrix span = Matrix::from_columns(prod.coefficients.size(), ideal.degrees[prod.degree]);
        if (!solve(field, span, prod.coefficients)) return false;
      }
    }
  }
  return true;
}

std::vector<Element> standard_zero_divisors(const GradedAlgebra& a, const TensorPower& power) {
  const GradedAlgebra& p = power.algebra;
  const FieldSpec& field = a.field();
  const std::size_t m = power.m;
  // Locate the power basis element with a given factor tuple.
  auto locate = [&](const std::vector<std::size_t>& tuple) {
    for (std::size_t g = 0; g < power.factors.size(); ++g) {
      if (power.factors[g] == tuple) return p.ref_of(g);
    }
    throw DomainError("factor tuple not found in tensor power");
  };
  std::vector<Element> out;
  for (std::size_t g = 1; g < a.total_dimension(); ++g) {
    const std::size_t d = a.ref_of(g).degree;
    std::vector<std::size_t> last(m, 0);
    last[m - 1] = g;
    const BasisRef last_ref = locate(last);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::vector<std::size_t> tuple(m, 0);
      tuple[i] = g;
      Element z = p.zero(d);
      z.coefficients[locate(tuple).index] = field.reduce(Rational(1));
      z.coefficients[last_ref.index] = field.reduce(Rational(-1));
      out.push_back(std::move(z));
    }
  }
  return out;
}

namespace {

struct Search {
  const GradedAlgebra& algebra;
  const std::vector<Element>& candidates;
  const ProductSearchOptions& options;
  std::size_t min_degree;
  ProductSearchResult result;
  std::vector<std::size_t> path;

  std::size_t reach(std::size_t length, std::size_t degree) const {
    return length + (algebra.top_degree() - degree) / min_degree;
  }

  void visit(std::size_t start, const Element& product) {
    for (std::size_t j = start; j < candidates.size(); ++j) {
      if (result.nodes >= options.node_budget) {
        result.truncated = true;
        return;
      }
      const Element& c = candidates[j];
      if (product.degree + c.degree > algebra.top_degree()) continue;
      if (reach(path.size() + 1, product.degree + c.degree) <= result.length) continue;
      ++result.nodes;
      Element next = algebra.multiply(product, c);
      if (next.is_zero()) continue;
      path.push_back(j);
      if (path.size() > result.length) {
        result.length = path.size();
        result.witness = path;
      }
      if (path.size() >= options.max_length) {
        for (std::size_t k = j; k < candidates.size() && !result.truncated; ++k) {
          if (next.degree + candidates[k].degree > algebra.top_degree()) continue;
          if (!algebra.multiply(next, candidates[k]).is_zero()) result.truncated = true;
        }
      } else {
        visit(j, next);
      }
      path.pop_back();
      if (result.truncated && result.nodes >= options.node_budget) return;
    }
  }
};

CupLengthResult to_cup_result(const GradedAlgebra& algebra, const std::vector<Element>& candidates,
                              const ProductSearchResult& r) {
  CupLengthResult out;
  out.length = r.length;
  out.truncated = r.truncated;
  for (std::size_t j : r.witness) out.witness.push_back(describe(algebra, candidates[j]));
  return out;
}

}  // namespace

ProductSearchResult longest_nonzero_product(const GradedAlgebra& algebra, const std::vector<Element>& candidates,
                                            const ProductSearchOptions& options) {
  std::size_t min_degree = algebra.top_degree() + 1;
  for (const Element& c : candidates) {
    if (c.degree == 0) throw DomainError("product search candidates must have positive degree");
    min_degree = std::min(min_degree, c.degree);
  }
  Search search{algebra, candidates, options, std::max<std::size_t>(min_degree, 1), {}, {}};
  if (candidates.empty()) return search.result;
  search.visit(0, algebra.unit());
  return search.result;
}

CupLengthResult cup_length_search(const GradedAlgebra& a, const ProductSearchOptions& options) {
  std::vector<Element> candidates;
  for (std::size_t g = a.dimension(0); g < a.total_dimension(); ++g) candidates.push_back(a.basis(a.ref_of(g)));
  return to_cup_result(a, candidates, longest_nonzero_product(a, candidates, options));
}

std::size_t cup_length(const GradedAlgebra& a) {
  CupLengthResult r = cup_length_search(a);
  if (r.truncated) throw BudgetExceeded("cup length search truncated at length " + std::to_string(r.length));
  return r.length;
}

CupLengthResult zero_divisor_search(const GradedAlgebra& a, std::size_t m, const ProductSearchOptions& options) {
  DiagonalKernel dk = diagonal_kernel(a, m);
  std::vector<Element> candidates = standard_zero_divisors(a, dk.power);
  for (std::size_t d = 1; d < dk.kernel.degrees.size(); ++d) {
    for (const Vector& v : dk.kernel.degrees[d]) candidates.push_back(Element{d, v});
  }
  return to_cup_result(dk.power.algebra, candidates, longest_nonzero_product(dk.power.algebra, candidates, options));
}

std::size_t zero_divisor_cup_length(const GradedAlgebra& a, std::size_t m) {
  CupLengthResult r = zero_divisor_search(a, m);
  if (r.truncated) throw BudgetExceeded("zero-divisor search truncated at length " + std::to_string(r.length));
  return r.length;
}

std::optional<std::size_t> has_nonzero_positive_degree(const GradedAlgebra& a) {
  for (std::size_t d = 1; d <= a.top_degree(); ++d) {
    if (a.dimension(d) > 0) return d;
  }
  return std::nullopt;
}

std::string describe(const GradedAlgebra& algebra, const Element& element) {
  std::string out;
  for (std::size_t i = 0; i < element.coefficients.size(); ++i) {
    const Rational& c = element.coefficients[i];
    if (c == 0) continue;
    const std::string& label = algebra.label({element.degree, i});
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += to_string(c) + "*";
    } else if (c < 0) {
      out += " - ";
      if (c != -1) out += to_string(Rational(-c)) + "*";
    } else {
      out += " + ";
      if (c != 1) out += to_string(c) + "*";
    }
    out += label;
  }
  return out.empty() ? "0" : out;
}

}  // namespace intertwine
