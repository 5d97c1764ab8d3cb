#include "intertwine/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "intertwine/error.hpp"
#include "json.hpp"

namespace intertwine {
namespace {

constexpr std::size_t kMaxSimplexSize = 16;

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::string name, std::size_t vertex_count, std::vector<Simplex> maximal_simplices)
    : name_(std::move(name)), vertex_count_(vertex_count), maximal_(std::move(maximal_simplices)) {
  if (vertex_count_ == 0 || maximal_.empty()) throw DomainError("complex '" + name_ + "' is empty");
  std::vector<bool> used(vertex_count_, false);
  for (Simplex& s : maximal_) {
    if (s.empty()) throw DomainError("complex '" + name_ + "': maximal simplex is empty");
    if (s.size() > kMaxSimplexSize) throw DomainError("complex '" + name_ + "': simplex too large");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw DomainError("complex '" + name_ + "': repeated vertex in a maximal simplex");
    }
    for (std::size_t v : s) {
      if (v >= vertex_count_) throw DomainError("complex '" + name_ + "': vertex index " + std::to_string(v) + " out of range");
      used[v] = true;
    }
  }
  std::sort(maximal_.begin(), maximal_.end());
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (!used[v]) throw DomainError("complex '" + name_ + "': vertex " + std::to_string(v) + " appears in no maximal simplex");
  }
  for (std::size_t i = 0; i < maximal_.size(); ++i) {
    for (std::size_t j = 0; j < maximal_.size(); ++j) {
      if (i == j) continue;
      if (maximal_[i] == maximal_[j]) throw DomainError("complex '" + name_ + "': duplicate maximal simplex");
      if (std::includes(maximal_[j].begin(), maximal_[j].end(), maximal_[i].begin(), maximal_[i].end())) {
        throw DomainError("complex '" + name_ + "': maximal simplex is a face of another maximal simplex");
      }
    }
  }
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Simplex& s : maximal_) {
    for (std::size_t k = 1; k < s.size(); ++k) parent[find_root(parent, s[k])] = find_root(parent, s[0]);
  }
  for (std::size_t v = 1; v < vertex_count_; ++v) {
    if (find_root(parent, v) != find_root(parent, 0)) throw DomainError("complex '" + name_ + "' is not path-connected");
  }

  for (const Simplex& s : maximal_) dimension_ = std::max(dimension_, s.size() - 1);
  std::vector<std::set<Simplex>> faces(dimension_ + 1);
  for (const Simplex& s : maximal_) {
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (std::size_t{1} << k)) face.push_back(s[k]);
      }
      faces[face.size() - 1].insert(std::move(face));
    }
  }
  for (auto& level : faces) faces_.emplace_back(level.begin(), level.end());
}

const std::vector<Simplex>& SimplicialComplex::faces(std::size_t d) const {
  static const std::vector<Simplex> kEmpty;
  return d < faces_.size() ? faces_[d] : kEmpty;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts;
  for (const auto& level : faces_) counts.push_back(level.size());
  return counts;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < faces_.size(); ++d) {
    long n = static_cast<long>(faces_[d].size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

SimplicialComplex parse_complex(const std::string& json_text) {
  try {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    return SimplicialComplex(doc.value("name", std::string("complex")), doc.at("vertex_count").get<std::size_t>(),
                             doc.at("maximal_simplices").get<std::vector<Simplex>>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed complex file: ") + e.what());
  }
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open complex file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_complex(buffer.str());
}

std::string complex_to_json(const SimplicialComplex& complex) {
  nlohmann::json doc;
  doc["name"] = complex.name();
  doc["vertex_count"] = complex.vertex_count();
  doc["maximal_simplices"] = complex.maximal_simplices();
  return doc.dump();
}

CochainComplex cochain_complex(const SimplicialComplex& complex, const FieldSpec& field) {
  CochainComplex cc;
  cc.field = field;
  for (std::size_t d = 0; d <= complex.dimension(); ++d) cc.simplices.push_back(complex.faces(d));
  for (std::size_t d = 0; d <= complex.dimension(); ++d) {
    const auto& lower = cc.simplices[d];
    if (d == complex.dimension()) {
      cc.coboundary.emplace_back(0, lower.size());
      continue;
    }
    const auto& upper = cc.simplices[d + 1];
    std::map<Simplex, std::size_t> position;
    for (std::size_t i = 0; i < lower.size(); ++i) position.emplace(lower[i], i);
    Matrix delta(upper.size(), lower.size());
    for (std::size_t row = 0; row < upper.size(); ++row) {
      const Simplex& tau = upper[row];
      for (std::size_t k = 0; k < tau.size(); ++k) {
        Simplex face = tau;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        delta(row, position.at(face)) = field.reduce(Rational(k % 2 == 0 ? 1 : -1));
      }
    }
    cc.coboundary.push_back(std::move(delta));
  }
  return cc;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, const FieldSpec& field) {
  CochainComplex cc = cochain_complex(complex, field);
  std::vector<std::size_t> betti;
  std::size_t previous_rank = 0;
  for (std::size_t d = 0; d <= cc.top_dimension(); ++d) {
    const std::size_t r = rank(field, cc.coboundary[d]);
    betti.push_back(cc.simplices[d].size() - r - previous_rank);
    previous_rank = r;
  }
  return betti;
}

Vector cup_cochains(const SimplicialComplex& complex, const FieldSpec& field, std::size_t p, const Vector& a,
                    std::size_t q, const Vector& b) {
  const auto& target = complex.faces(p + q);
  Vector out(target.size());
  if (target.empty()) return out;
  std::map<Simplex, std::size_t> front_index;
  std::map<Simplex, std::size_t> back_index;
  const auto& front_faces = complex.faces(p);
  const auto& back_faces = complex.faces(q);
  for (std::size_t i = 0; i < front_faces.size(); ++i) front_index.emplace(front_faces[i], i);
  for (std::size_t i = 0; i < back_faces.size(); ++i) back_index.emplace(back_faces[i], i);
  for (std::size_t t = 0; t < target.size(); ++t) {
    const Simplex& s = target[t];
    Simplex front(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p + 1));
    Simplex back(s.begin() + static_cast<std::ptrdiff_t>(p), s.end());
    const Rational& x = a[front_index.at(front)];
    if (x == 0) continue;
    const Rational& y = b[back_index.at(back)];
    if (y == 0) continue;
    out[t] = field.mul(x, y);
  }
  return out;
}

CohomologyRing cohomology(const SimplicialComplex& complex, const FieldSpec& field) {
  CochainComplex cc = cochain_complex(complex, field);
  const std::size_t top = cc.top_dimension();
  std::vector<std::vector<Vector>> reps(top + 1);
  std::vector<std::size_t> dims(top + 1, 0);
  std::vector<LinearSolver> projectors;

  for (std::size_t d = 0; d <= top; ++d) {
    const std::size_t n = cc.simplices[d].size();
    std::vector<Vector> cocycles = null_space(field, cc.coboundary[d]);
    std::vector<Vector> boundaries;
    if (d > 0) {
      const Matrix& prev = cc.coboundary[d - 1];
      for (std::size_t c = 0; c < prev.cols(); ++c) boundaries.push_back(prev.column(c));
    }
    if (d == 0) {
      // Connected: the constant cochain spans Z^0 and represents the unit.
      reps[0] = {Vector(n, Rational(1))};
    } else {
      std::vector<Vector> columns = boundaries;
      columns.insert(columns.end(), cocycles.begin(), cocycles.end());
      EchelonForm ef = row_reduce(field, Matrix::from_columns(n, columns));
      for (std::size_t pivot : ef.pivot_columns) {
        if (pivot >= boundaries.size()) reps[d].push_back(cocycles[pivot - boundaries.size()]);
      }
    }
    dims[d] = reps[d].size();
    std::vector<Vector> columns = reps[d];
    columns.insert(columns.end(), boundaries.begin(), boundaries.end());
    projectors.emplace_back(field, Matrix::from_columns(n, columns));
  }

  std::vector<std::vector<std::string>> labels(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < dims[d]; ++i) {
      labels[d].push_back(d == 0 ? "1" : "h" + std::to_string(d) + "_" + std::to_string(i));
    }
  }

  std::vector<GradedAlgebra::Product> products;
  for (std::size_t p = 1; p <= top; ++p) {
    for (std::size_t q = 1; p + q <= top; ++q) {
      for (std::size_t i = 0; i < dims[p]; ++i) {
        for (std::size_t j = 0; j < dims[q]; ++j) {
          Vector cup = cup_cochains(complex, field, p, reps[p][i], q, reps[q][j]);
          std::optional<Vector> coords = projectors[p + q].solve(cup);
          if (!coords) throw DomainError("cup product of cocycles is not a cocycle (internal error)");
          Vector result(coords->begin(), coords->begin() + static_cast<std::ptrdiff_t>(dims[p + q]));
          if (!is_zero(result)) products.push_back({{p, i}, {q, j}, std::move(result)});
        }
      }
    }
  }
  GradedAlgebra algebra(complex.name(), field, dims, std::move(labels), products);
  return CohomologyRing{std::move(algebra), std::move(reps)};
}

}  // namespace intertwine
