#include "intertwine/algebra.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "intertwine/error.hpp"
#include "json.hpp"

namespace intertwine {
namespace {

bool odd(std::size_t a, std::size_t b) { return (a * b) % 2 == 1; }

}  // namespace

GradedAlgebra::GradedAlgebra(std::string name, FieldSpec field, std::vector<std::size_t> dims,
                             std::vector<std::vector<std::string>> labels, const std::vector<Product>& products)
    : name_(std::move(name)), field_(field), dims_(std::move(dims)), labels_(std::move(labels)) {
  while (dims_.size() > 1 && dims_.back() == 0) dims_.pop_back();
  if (dims_.empty() || dims_[0] != 1) throw DomainError("graded algebra must have a one-dimensional degree-0 part");
  labels_.resize(dims_.size());
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    if (labels_[d].empty() && dims_[d] > 0) {
      for (std::size_t i = 0; i < dims_[d]; ++i) {
        labels_[d].push_back(d == 0 ? "1" : "e" + std::to_string(d) + "_" + std::to_string(i));
      }
    }
    if (labels_[d].size() != dims_[d]) throw DomainError("label count does not match dimension in degree " + std::to_string(d));
  }
  offsets_.assign(dims_.size() + 1, 0);
  for (std::size_t d = 0; d < dims_.size(); ++d) offsets_[d + 1] = offsets_[d] + dims_[d];
  const std::size_t n = total_dimension();
  table_.assign(n * n, {});

  for (std::size_t g = 0; g < n; ++g) {
    BasisRef r = ref_of(g);
    entry({0, 0}, r) = {{r.index, Rational(1)}};
    entry(r, {0, 0}) = {{r.index, Rational(1)}};
  }

  std::vector<bool> given(n * n, false);
  auto to_sparse = [&](const Vector& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational c = field_.reduce(v[i]);
      if (c != 0) s.emplace_back(i, c);
    }
    return s;
  };
  for (const Product& p : products) {
    for (const BasisRef& r : {p.left, p.right}) {
      if (r.degree >= dims_.size() || r.index >= dims_[r.degree] || r.degree == 0) {
        throw DomainError("product entry references an invalid positive-degree basis element");
      }
    }
    const std::size_t target = p.left.degree + p.right.degree;
    if (target > top_degree()) {
      if (!is_zero(p.result)) throw DomainError("nonzero product above the top degree");
      continue;
    }
    if (p.result.size() != dims_[target]) throw DomainError("product coefficient count does not match target dimension");
    entry(p.left, p.right) = to_sparse(p.result);
    given[global_index(p.left) * n + global_index(p.right)] = true;
  }
  for (std::size_t a = offsets_[1]; a < n; ++a) {
    for (std::size_t b = offsets_[1]; b < n; ++b) {
      if (given[a * n + b] || !given[b * n + a]) continue;
      BasisRef ra = ref_of(a);
      BasisRef rb = ref_of(b);
      SparseVector mirrored = entry(rb, ra);
      if (odd(ra.degree, rb.degree)) {
        for (auto& [idx, c] : mirrored) c = field_.neg(c);
      }
      entry(ra, rb) = std::move(mirrored);
    }
  }
}

GradedAlgebra GradedAlgebra::point(const FieldSpec& field) {
  return GradedAlgebra("point", field, {1}, {{"1"}}, {});
}

GradedAlgebra GradedAlgebra::sphere(std::size_t k, const FieldSpec& field) {
  if (k == 0) throw DomainError("sphere dimension must be positive");
  std::vector<std::size_t> dims(k + 1, 0);
  dims[0] = 1;
  dims[k] = 1;
  std::vector<std::vector<std::string>> labels(k + 1);
  labels[0] = {"1"};
  labels[k] = {"x"};
  return GradedAlgebra("S" + std::to_string(k), field, std::move(dims), std::move(labels), {});
}

BasisRef GradedAlgebra::ref_of(std::size_t global) const {
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    if (global < offsets_[d + 1]) return {d, global - offsets_[d]};
  }
  throw DomainError("basis index out of range");
}

Element GradedAlgebra::basis(BasisRef ref) const {
  if (ref.degree >= dims_.size() || ref.index >= dims_[ref.degree]) throw DomainError("basis element out of range");
  Element e{ref.degree, Vector(dims_[ref.degree])};
  e.coefficients[ref.index] = 1;
  return e;
}

Element GradedAlgebra::zero(std::size_t degree) const { return Element{degree, Vector(dimension(degree))}; }

const SparseVector& GradedAlgebra::basis_product(BasisRef a, BasisRef b) const {
  return table_[global_index(a) * total_dimension() + global_index(b)];
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const {
  const std::size_t degree = a.degree + b.degree;
  Element out = zero(degree);
  if (degree > top_degree()) return out;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    if (a.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      if (b.coefficients[j] == 0) continue;
      Rational scale = field_.mul(a.coefficients[i], b.coefficients[j]);
      for (const auto& [k, c] : basis_product({a.degree, i}, {b.degree, j})) {
        out.coefficients[k] = field_.add(out.coefficients[k], field_.mul(scale, c));
      }
    }
  }
  return out;
}

std::vector<GradedAlgebra::Product> GradedAlgebra::nonzero_products() const {
  std::vector<Product> out;
  const std::size_t n = total_dimension();
  for (std::size_t a = offsets_[1]; a < n; ++a) {
    for (std::size_t b = offsets_[1]; b < n; ++b) {
      BasisRef ra = ref_of(a);
      BasisRef rb = ref_of(b);
      const SparseVector& s = basis_product(ra, rb);
      if (s.empty()) continue;
      Vector dense(dimension(ra.degree + rb.degree));
      for (const auto& [k, c] : s) dense[k] = c;
      out.push_back(Product{ra, rb, std::move(dense)});
    }
  }
  return out;
}

std::optional<std::string> GradedAlgebra::check_axioms() const {
  const std::size_t n = total_dimension();
  Element one = unit();
  for (std::size_t g = 0; g < n; ++g) {
    Element e = basis(ref_of(g));
    if (multiply(one, e) != e || multiply(e, one) != e) return "unit is not a two-sided identity on " + label(ref_of(g));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      BasisRef ra = ref_of(a);
      BasisRef rb = ref_of(b);
      Element ab = multiply(basis(ra), basis(rb));
      Element ba = multiply(basis(rb), basis(ra));
      if (odd(ra.degree, rb.degree)) {
        for (Rational& c : ba.coefficients) c = field_.neg(c);
      }
      if (ab != ba) return "graded commutativity fails for " + label(ra) + ", " + label(rb);
    }
  }
  for (std::size_t a = offsets_.size() > 2 ? offsets_[1] : n; a < n; ++a) {
    for (std::size_t b = offsets_[1]; b < n; ++b) {
      BasisRef ra = ref_of(a);
      BasisRef rb = ref_of(b);
      if (ra.degree + rb.degree > top_degree()) continue;
      Element ab = multiply(basis(ra), basis(rb));
      for (std::size_t c = offsets_[1]; c < n; ++c) {
        BasisRef rc = ref_of(c);
        if (ra.degree + rb.degree + rc.degree > top_degree()) continue;
        Element left = multiply(ab, basis(rc));
        Element right = multiply(basis(ra), multiply(basis(rb), basis(rc)));
        if (left != right) return "associativity fails for " + label(ra) + ", " + label(rb) + ", " + label(rc);
      }
    }
  }
  return std::nullopt;
}

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw DomainError("tensor product of algebras over different fields");
  const FieldSpec& field = a.field();
  const std::size_t top = a.top_degree() + b.top_degree();
  std::vector<std::size_t> dims(top + 1, 0);
  std::vector<std::vector<std::string>> labels(top + 1);
  std::map<std::pair<std::size_t, std::size_t>, BasisRef> index;

  std::vector<std::vector<std::pair<BasisRef, BasisRef>>> by_degree(top + 1);
  for (std::size_t ga = 0; ga < a.total_dimension(); ++ga) {
    for (std::size_t gb = 0; gb < b.total_dimension(); ++gb) {
      BasisRef ra = a.ref_of(ga);
      BasisRef rb = b.ref_of(gb);
      by_degree[ra.degree + rb.degree].emplace_back(ra, rb);
    }
  }
  for (std::size_t d = 0; d <= top; ++d) {
    dims[d] = by_degree[d].size();
    for (std::size_t i = 0; i < by_degree[d].size(); ++i) {
      const auto& [ra, rb] = by_degree[d][i];
      index[{a.global_index(ra), b.global_index(rb)}] = BasisRef{d, i};
      labels[d].push_back(a.label(ra) + "⊗" + b.label(rb));
    }
  }

  std::vector<GradedAlgebra::Product> products;
  for (std::size_t d1 = 1; d1 <= top; ++d1) {
    for (std::size_t i1 = 0; i1 < dims[d1]; ++i1) {
      const auto& [a1, b1] = by_degree[d1][i1];
      for (std::size_t d2 = 1; d1 + d2 <= top; ++d2) {
        for (std::size_t i2 = 0; i2 < dims[d2]; ++i2) {
          const auto& [a2, b2] = by_degree[d2][i2];
          if (a1.degree + a2.degree > a.top_degree() || b1.degree + b2.degree > b.top_degree()) continue;
          const SparseVector& left = a.basis_product(a1, a2);
          const SparseVector& right = b.basis_product(b1, b2);
          if (left.empty() || right.empty()) continue;
          const bool negate = odd(b1.degree, a2.degree);
          Vector result(dims[d1 + d2]);
          bool nonzero = false;
          for (const auto& [ka, ca] : left) {
            for (const auto& [kb, cb] : right) {
              BasisRef pa{a1.degree + a2.degree, ka};
              BasisRef pb{b1.degree + b2.degree, kb};
              BasisRef target = index.at({a.global_index(pa), b.global_index(pb)});
              Rational c = field.mul(ca, cb);
              if (negate) c = field.neg(c);
              result[target.index] = field.add(result[target.index], c);
              nonzero = true;
            }
          }
          if (nonzero && !is_zero(result)) products.push_back({{d1, i1}, {d2, i2}, std::move(result)});
        }
      }
    }
  }
  return GradedAlgebra(a.name() + "⊗" + b.name(), field, std::move(dims), std::move(labels), products);
}

GradedAlgebra parse_ring(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("ring file is not valid JSON: ") + e.what());
  }
  try {
    std::string name = doc.value("name", std::string("ring"));
    FieldSpec field = FieldSpec::parse(doc.value("field", std::string("Q")));
    auto dims = doc.at("dims").get<std::vector<std::size_t>>();
    std::vector<std::vector<std::string>> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::vector<std::string>>>();
    std::vector<GradedAlgebra::Product> products;
    for (const auto& entry : doc.value("products", nlohmann::json::array())) {
      if (!entry.is_array() || entry.size() != 5) throw DomainError("product entry must be [i, a, j, b, coefficients]");
      GradedAlgebra::Product p;
      p.left = {entry[0].get<std::size_t>(), entry[1].get<std::size_t>()};
      p.right = {entry[2].get<std::size_t>(), entry[3].get<std::size_t>()};
      for (const auto& c : entry[4]) {
        p.result.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
      }
      products.push_back(std::move(p));
    }
    GradedAlgebra algebra(std::move(name), field, std::move(dims), std::move(labels), products);
    if (auto failure = algebra.check_axioms()) throw DomainError("ring '" + algebra.name() + "': " + *failure);
    return algebra;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ring file: ") + e.what());
  }
}

GradedAlgebra load_ring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open ring file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ring(buffer.str());
}

std::string ring_to_json(const GradedAlgebra& algebra) {
  nlohmann::json doc;
  doc["name"] = algebra.name();
  doc["field"] = algebra.field().name();
  doc["dims"] = algebra.dims();
  nlohmann::json labels = nlohmann::json::array();
  for (std::size_t d = 0; d < algebra.dims().size(); ++d) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t i = 0; i < algebra.dimension(d); ++i) row.push_back(algebra.label({d, i}));
    labels.push_back(row);
  }
  doc["labels"] = labels;
  nlohmann::json products = nlohmann::json::array();
  for (const auto& p : algebra.nonzero_products()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.result) coeffs.push_back(to_string(c));
    products.push_back({p.left.degree, p.left.index, p.right.degree, p.right.index, coeffs});
  }
  doc["products"] = products;
  return doc.dump(2);
}

}  // namespace intertwine
