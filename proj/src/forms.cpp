// Normal forms, exterior calculus and exact integration of piecewise
// polynomial differential forms.

#include "derham/forms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "derham/errors.hpp"

namespace derham {

namespace {

// Sorts a frame in place, returning the permutation sign, or 0 when a
// vertex repeats (the term vanishes).
int sort_frame(std::vector<VertexId>& frame) {
  int sign = 1;
  for (std::size_t i = 1; i < frame.size(); ++i) {
    VertexId v = frame[i];
    std::size_t j = i;
    while (j > 0 && frame[j - 1] > v) {
      frame[j] = frame[j - 1];
      --j;
      sign = -sign;
    }
    frame[j] = v;
  }
  for (std::size_t i = 1; i < frame.size(); ++i) {
    if (frame[i - 1] == frame[i]) return 0;
  }
  return sign;
}

void check_vertex_in_carrier(VertexId v,
                             const std::vector<VertexId>& carrier) {
  if (!std::binary_search(carrier.begin(), carrier.end(), v)) {
    throw StructuralError("vertex " + std::to_string(v) +
                          " does not belong to the carrying simplex");
  }
}

int clamp_degree(const SimplicialComplex& k, int degree) {
  const int n = k.dim();
  if (degree < -1) return -1;
  if (degree > n + 1) return n + 1;
  return degree;
}

}  // namespace

bool term_precedes(const BarycentricTerm& a, const BarycentricTerm& b) {
  if (a.frame != b.frame) return a.frame < b.frame;
  return a.monomial < b.monomial;
}

std::vector<BarycentricTerm> normalize_terms(
    std::vector<BarycentricTerm> terms,
    const std::vector<VertexId>& carrier_vertices) {
  std::vector<BarycentricTerm> out;
  for (auto& term : terms) {
    if (term.coefficient == 0) continue;

    // Clean the monomial, splitting off any power of the minimal coordinate.
    Monomial reduced;
    int minimal_power = 0;
    for (const auto& [v, exponent] : term.monomial) {
      check_vertex_in_carrier(v, carrier_vertices);
      if (exponent < 0) {
        throw StructuralError("negative exponent on lambda_" +
                              std::to_string(v));
      }
      if (exponent == 0) continue;
      if (v == carrier_vertices.front()) {
        minimal_power = exponent;
      } else {
        reduced.emplace(v, exponent);
      }
    }

    // lambda_{u0} = 1 - sum_{i>=1} lambda_{ui}: expand its power into a
    // polynomial over the independent coordinates.
    std::map<Monomial, Rational> polynomial;
    polynomial.emplace(std::move(reduced), Rational(1));
    for (int step = 0; step < minimal_power; ++step) {
      std::map<Monomial, Rational> next;
      for (const auto& [monomial, weight] : polynomial) {
        next[monomial] += weight;
        for (std::size_t i = 1; i < carrier_vertices.size(); ++i) {
          Monomial bumped = monomial;
          ++bumped[carrier_vertices[i]];
          next[std::move(bumped)] -= weight;
        }
      }
      polynomial = std::move(next);
    }

    for (VertexId v : term.frame) check_vertex_in_carrier(v, carrier_vertices);
    std::vector<VertexId> frame = term.frame;
    int sign = sort_frame(frame);
    if (sign == 0) continue;
    Rational coefficient = term.coefficient * sign;

    std::vector<std::pair<Rational, std::vector<VertexId>>> frames;
    if (!frame.empty() && frame.front() == carrier_vertices.front()) {
      // dlambda_{u0} = -sum over the other carrier vertices.
      std::vector<VertexId> rest(frame.begin() + 1, frame.end());
      for (std::size_t i = 1; i < carrier_vertices.size(); ++i) {
        VertexId u = carrier_vertices[i];
        auto pos = std::lower_bound(rest.begin(), rest.end(), u);
        if (pos != rest.end() && *pos == u) continue;
        std::vector<VertexId> replaced;
        replaced.reserve(frame.size());
        replaced.insert(replaced.end(), rest.begin(), pos);
        replaced.push_back(u);
        replaced.insert(replaced.end(), pos, rest.end());
        int insertion_sign =
            ((pos - rest.begin()) % 2 == 0) ? 1 : -1;
        frames.emplace_back(-coefficient * insertion_sign,
                            std::move(replaced));
      }
    } else {
      frames.emplace_back(std::move(coefficient), std::move(frame));
    }

    for (const auto& [frame_coefficient, frame_vertices] : frames) {
      for (const auto& [monomial, weight] : polynomial) {
        if (weight == 0) continue;
        out.push_back(BarycentricTerm{frame_coefficient * weight, monomial,
                                      frame_vertices});
      }
    }
  }

  std::sort(out.begin(), out.end(), term_precedes);
  std::vector<BarycentricTerm> merged;
  for (auto& term : out) {
    if (!merged.empty() && merged.back().frame == term.frame &&
        merged.back().monomial == term.monomial) {
      merged.back().coefficient += term.coefficient;
      if (merged.back().coefficient == 0) merged.pop_back();
    } else {
      merged.push_back(std::move(term));
    }
  }
  return merged;
}

std::vector<BarycentricTerm> restrict_to_face(
    const std::vector<BarycentricTerm>& terms,
    const std::vector<VertexId>& face_vertices) {
  std::vector<BarycentricTerm> survivors;
  for (const auto& term : terms) {
    bool vanishes = false;
    for (const auto& [v, exponent] : term.monomial) {
      if (!std::binary_search(face_vertices.begin(), face_vertices.end(), v)) {
        vanishes = true;  // lambda_v pulls back to 0 on the face
        break;
      }
    }
    for (VertexId v : term.frame) {
      if (vanishes) break;
      if (!std::binary_search(face_vertices.begin(), face_vertices.end(), v)) {
        vanishes = true;
      }
    }
    if (!vanishes) survivors.push_back(term);
  }
  return normalize_terms(std::move(survivors), face_vertices);
}

PolyForm::PolyForm(const SimplicialComplex& k, int degree)
    : complex_(&k), degree_(degree) {
  if (degree < -1 || degree > k.dim() + 1) {
    throw DimensionError("form degree " + std::to_string(degree) +
                         " outside [-1, " + std::to_string(k.dim() + 1) + "]");
  }
  terms_.assign(k.count(k.dim()), {});
}

PolyForm PolyForm::constant(const SimplicialComplex& k, const Rational& value) {
  PolyForm out(k, 0);
  if (value == 0) return out;
  for (auto& list : out.terms_) {
    list.push_back(BarycentricTerm{value, {}, {}});
  }
  return out;
}

const std::vector<BarycentricTerm>& PolyForm::terms(Index top_index) const {
  return terms_.at(top_index);
}

bool PolyForm::is_zero() const {
  for (const auto& list : terms_) {
    if (!list.empty()) return false;
  }
  return true;
}

namespace {

void check_same_complex(const PolyForm& a, const PolyForm& b) {
  if (&a.complex() != &b.complex()) {
    throw StructuralError("forms live on different complexes");
  }
}

}  // namespace

PolyForm& PolyForm::operator+=(const PolyForm& other) {
  check_same_complex(*this, other);
  if (degree_ != other.degree_) {
    throw DimensionError("adding forms of degrees " + std::to_string(degree_) +
                         " and " + std::to_string(other.degree_));
  }
  for (Index t = 0; t < terms_.size(); ++t) {
    if (other.terms_[t].empty()) continue;
    std::vector<BarycentricTerm> combined = terms_[t];
    combined.insert(combined.end(), other.terms_[t].begin(),
                    other.terms_[t].end());
    terms_[t] = normalize_terms(
        std::move(combined), complex_->simplices(complex_->dim())[t].vertices());
  }
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& other) {
  PolyForm negated = other;
  negated *= Rational(-1);
  return *this += negated;
}

PolyForm& PolyForm::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    for (auto& list : terms_) list.clear();
    return *this;
  }
  for (auto& list : terms_) {
    for (auto& term : list) term.coefficient *= scalar;
  }
  return *this;
}

bool PolyForm::operator==(const PolyForm& other) const {
  return degree_ == other.degree_ && terms_ == other.terms_;
}

PolyForm make_form(
    const SimplicialComplex& k, int degree,
    const std::map<Index, std::vector<BarycentricTerm>>& raw_terms) {
  PolyForm out(k, degree);
  const int n = k.dim();
  for (const auto& [top_index, terms] : raw_terms) {
    if (top_index >= k.count(n)) {
      throw StructuralError("top simplex index " + std::to_string(top_index) +
                            " out of range");
    }
    for (const auto& term : terms) {
      if (static_cast<int>(term.frame.size()) != degree && degree >= 0) {
        throw StructuralError(
            "frame size " + std::to_string(term.frame.size()) +
            " does not match form degree " + std::to_string(degree));
      }
      if (degree < 0 && term.coefficient != 0) {
        throw StructuralError("a degree -1 form admits no terms");
      }
    }
    out.terms_[top_index] =
        normalize_terms(terms, k.simplices(n)[top_index].vertices());
  }
  if (!tangentially_continuous(out)) {
    throw StructuralError("form is not tangentially continuous");
  }
  return out;
}

bool tangentially_continuous(const PolyForm& w) {
  const SimplicialComplex& k = w.complex();
  const int n = k.dim();
  if (n <= 0) return true;
  for (const auto& face : k.simplices(n - 1)) {
    const auto& tops = k.covering_tops(face);
    if (tops.size() < 2) continue;
    auto reference = restrict_to_face(w.terms(tops.front()), face.vertices());
    for (std::size_t i = 1; i < tops.size(); ++i) {
      if (restrict_to_face(w.terms(tops[i]), face.vertices()) != reference) {
        return false;
      }
    }
  }
  return true;
}

PolyForm exterior_derivative(const PolyForm& w) {
  const SimplicialComplex& k = w.complex();
  const int n = k.dim();
  if (w.degree() < 0 || w.degree() >= n) {
    return PolyForm(k, clamp_degree(k, w.degree() + 1));
  }
  PolyForm out(k, w.degree() + 1);
  for (Index t = 0; t < out.terms_.size(); ++t) {
    std::vector<BarycentricTerm> raw;
    for (const auto& term : w.terms(t)) {
      for (const auto& [v, exponent] : term.monomial) {
        Monomial reduced = term.monomial;
        if (exponent == 1) {
          reduced.erase(v);
        } else {
          reduced[v] = exponent - 1;
        }
        std::vector<VertexId> frame;
        frame.reserve(term.frame.size() + 1);
        frame.push_back(v);
        frame.insert(frame.end(), term.frame.begin(), term.frame.end());
        raw.push_back(BarycentricTerm{term.coefficient * exponent,
                                      std::move(reduced), std::move(frame)});
      }
    }
    out.terms_[t] =
        normalize_terms(std::move(raw), k.simplices(n)[t].vertices());
  }
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  check_same_complex(a, b);
  const SimplicialComplex& k = a.complex();
  const int n = k.dim();
  const int degree = a.degree() + b.degree();
  if (a.degree() < 0 || b.degree() < 0 || degree > n) {
    return PolyForm(k, clamp_degree(k, degree));
  }
  PolyForm out(k, degree);
  for (Index t = 0; t < out.terms_.size(); ++t) {
    std::vector<BarycentricTerm> raw;
    for (const auto& left : a.terms(t)) {
      for (const auto& right : b.terms(t)) {
        Monomial monomial = left.monomial;
        for (const auto& [v, exponent] : right.monomial) {
          monomial[v] += exponent;
        }
        std::vector<VertexId> frame = left.frame;
        frame.insert(frame.end(), right.frame.begin(), right.frame.end());
        raw.push_back(BarycentricTerm{left.coefficient * right.coefficient,
                                      std::move(monomial), std::move(frame)});
      }
    }
    out.terms_[t] =
        normalize_terms(std::move(raw), k.simplices(n)[t].vertices());
  }
  return out;
}

PolyForm whitney(const SimplicialComplex& k, const Cochain& f) {
  const int p = f.dim();
  const int n = k.dim();
  if (p < -1 || p > n + 1) {
    throw DimensionError("cochain degree " + std::to_string(p) +
                         " outside [-1, " + std::to_string(n + 1) + "]");
  }
  PolyForm out(k, p);
  if (p < 0 || p > n) return out;
  if (f.size() != k.count(p)) {
    throw DimensionError("cochain length does not match the complex");
  }
  const Rational scale(factorial(static_cast<unsigned>(p)));
  std::vector<std::vector<BarycentricTerm>> raw(k.count(n));
  const auto& sources = k.simplices(p);
  for (Index i = 0; i < sources.size(); ++i) {
    if (f[i] == 0) continue;
    const auto& v = sources[i].vertices();
    for (Index t : k.covering_tops(sources[i])) {
      for (int j = 0; j <= p; ++j) {
        std::vector<VertexId> frame;
        frame.reserve(p);
        for (int m = 0; m <= p; ++m) {
          if (m != j) frame.push_back(v[m]);
        }
        Rational coefficient = f[i] * scale;
        if (j % 2 == 1) coefficient = -coefficient;
        raw[t].push_back(BarycentricTerm{std::move(coefficient),
                                         Monomial{{v[j], 1}},
                                         std::move(frame)});
      }
    }
  }
  for (Index t = 0; t < raw.size(); ++t) {
    out.terms_[t] =
        normalize_terms(std::move(raw[t]), k.simplices(n)[t].vertices());
  }
  return out;
}

namespace {

// int_{Delta^k} lambda^mono over the standard ordered k-simplex.
Rational dirichlet_value(int k, const Monomial& monomial) {
  Integer numerator(1);
  unsigned total = 0;
  for (const auto& [v, exponent] : monomial) {
    numerator *= factorial(static_cast<unsigned>(exponent));
    total += static_cast<unsigned>(exponent);
  }
  return Rational(numerator) /
         Rational(factorial(static_cast<unsigned>(k) + total));
}

}  // namespace

Rational integrate(const PolyForm& w, const Simplex& s) {
  const SimplicialComplex& k = w.complex();
  if (w.degree() != s.dim()) {
    throw DimensionError("integrating a degree-" + std::to_string(w.degree()) +
                         " form over a " + std::to_string(s.dim()) +
                         "-simplex");
  }
  if (!k.contains(s)) {
    throw StructuralError("simplex " + s.to_string() +
                          " does not belong to the complex");
  }
  const auto& tops = k.covering_tops(s);
  if (tops.empty()) {
    throw StructuralError("simplex " + s.to_string() +
                          " is not covered by a top simplex");
  }
  // Tangential continuity makes the covering top irrelevant; the lowest
  // index keeps the computation canonical regardless.
  auto restricted = restrict_to_face(w.terms(tops.front()), s.vertices());
  Rational value(0);
  for (const auto& term : restricted) {
    // On a k-face in normal form the frame of a k-term is forced to be all
    // non-minimal face vertices, so only the monomial matters.
    value += term.coefficient * dirichlet_value(s.dim(), term.monomial);
  }
  return value;
}

Rational integrate(const PolyForm& w, const Chain& c) {
  if (w.degree() != c.dim()) {
    throw DimensionError("integrating a degree-" + std::to_string(w.degree()) +
                         " form over a " + std::to_string(c.dim()) + "-chain");
  }
  Rational value(0);
  for (const auto& [s, coefficient] : c.coefficients()) {
    value += coefficient * integrate(w, s);
  }
  return value;
}

Cochain derham_map(const SimplicialComplex& k, const PolyForm& w) {
  const int p = w.degree();
  Cochain out = Cochain::zero(k, p);
  const auto& targets = k.simplices(p);
  for (Index i = 0; i < targets.size(); ++i) {
    out[i] = integrate(w, targets[i]);
  }
  return out;
}

}  // namespace derham
