#include "mzva/findim.hpp"

#include <sstream>

#include "mzva/errors.hpp"

namespace mzva {

namespace {

std::string location(int line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

Rational parse_rational_or_throw(const std::string& word, int line) {
  auto r = Rational::parse(word);
  if (!r) throw ValidationError(location(line) + "expected a rational, got '" + word + "'");
  return *r;
}

int parse_index_or_throw(const std::string& word, int line, int dim) {
  auto r = Rational::parse(word);
  auto v = r ? r->to_int64() : std::nullopt;
  if (!v || *v < 1 || *v > dim)
    throw ValidationError(location(line) + "index '" + word + "' out of range 1.." + std::to_string(dim));
  return static_cast<int>(*v) - 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// FinDimAlgebra

FinDimAlgebra FinDimAlgebra::create(std::vector<std::string> labels, AlgVector unit,
                                    const std::vector<Constant>& constants) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw ValidationError("algebra dimension must be positive");
  if (static_cast<int>(unit.size()) != n) throw ValidationError("unit has wrong length");
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data->unit = std::move(unit);
  data->table.assign(n, std::vector<AlgVector>(n, AlgVector(n)));
  for (const auto& c : constants) {
    if (c.i < 0 || c.i >= n || c.j < 0 || c.j >= n || c.k < 0 || c.k >= n)
      throw ValidationError("structure constant index out of range");
    data->table[c.i][c.j][c.k] += c.value;
  }
  FinDimAlgebra a;
  a.data_ = data;

  const auto& lbl = data->labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (data->table[i][j] != data->table[j][i])
        throw ValidationError("not commutative: " + lbl[i] + "*" + lbl[j] + " != " + lbl[j] + "*" + lbl[i]);
  for (int i = 0; i < n; ++i) {
    AlgVector e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e) throw ValidationError("unit law fails on " + lbl[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        AlgVector ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
        if (a.multiply(a.multiply(ei, ej), ek) != a.multiply(ei, a.multiply(ej, ek)))
          throw ValidationError("not associative on (" + lbl[i] + ", " + lbl[j] + ", " + lbl[k] + ")");
      }
  return a;
}

FinDimAlgebra FinDimAlgebra::parse(std::string_view text) {
  int dim = -1;
  std::vector<std::string> labels;
  AlgVector unit;
  std::vector<Constant> constants;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto words = split_words(strip_comment(text.substr(pos, end - pos)));
    pos = end + 1;
    if (words.empty()) continue;
    const std::string& key = words[0];
    if (key == "dim") {
      if (words.size() != 2) throw ValidationError(location(line_no) + "usage: dim N");
      auto v = Rational::parse(words[1]);
      auto n = v ? v->to_int64() : std::nullopt;
      if (!n || *n < 1 || *n > 64) throw ValidationError(location(line_no) + "dimension must be in 1..64");
      dim = static_cast<int>(*n);
      continue;
    }
    if (dim < 0) throw ValidationError(location(line_no) + "'dim' must come first");
    if (key == "labels") {
      if (static_cast<int>(words.size()) != dim + 1)
        throw ValidationError(location(line_no) + "expected " + std::to_string(dim) + " labels");
      labels.assign(words.begin() + 1, words.end());
    } else if (key == "unit") {
      if (static_cast<int>(words.size()) != dim + 1)
        throw ValidationError(location(line_no) + "expected " + std::to_string(dim) + " unit coordinates");
      unit.clear();
      for (std::size_t i = 1; i < words.size(); ++i) unit.push_back(parse_rational_or_throw(words[i], line_no));
    } else if (key == "const") {
      if (words.size() != 5) throw ValidationError(location(line_no) + "usage: const i j k value");
      constants.push_back({parse_index_or_throw(words[1], line_no, dim),
                           parse_index_or_throw(words[2], line_no, dim),
                           parse_index_or_throw(words[3], line_no, dim),
                           parse_rational_or_throw(words[4], line_no)});
    } else {
      throw ValidationError(location(line_no) + "unknown directive '" + key + "'");
    }
  }
  if (dim < 0) throw ValidationError("missing 'dim'");
  if (labels.empty())
    for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  if (unit.empty()) throw ValidationError("missing 'unit'");
  return create(std::move(labels), std::move(unit), constants);
}

FinDimAlgebra FinDimAlgebra::truncated_polynomial(int k, const std::string& var) {
  if (k < 1) throw ValidationError("truncation degree must be >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
  std::vector<Constant> cs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k) cs.push_back({i, j, i + j, Rational(1)});
  AlgVector unit(k);
  unit[0] = Rational(1);
  return create(std::move(labels), std::move(unit), cs);
}

FinDimAlgebra FinDimAlgebra::split(int copies) {
  if (copies < 1) throw ValidationError("split algebra needs at least one factor");
  std::vector<std::string> labels;
  std::vector<Constant> cs;
  AlgVector unit(copies, Rational(1));
  for (int i = 0; i < copies; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    cs.push_back({i, i, i, Rational(1)});
  }
  return create(std::move(labels), std::move(unit), cs);
}

FinDimAlgebra FinDimAlgebra::tensor(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  const int n = a.dim(), m = b.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const auto& la = a.labels()[i];
      const auto& lb = b.labels()[j];
      labels.push_back(la == "1" ? lb : lb == "1" ? la : la + "*" + lb);
    }
  AlgVector unit(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) unit[i * m + j] = a.unit()[i] * b.unit()[j];
  std::vector<Constant> cs;
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < m; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2) {
          const auto& pa = a.data_->table[i1][i2];
          const auto& pb = b.data_->table[j1][j2];
          for (int k = 0; k < n; ++k) {
            if (pa[k].is_zero()) continue;
            for (int l = 0; l < m; ++l)
              if (!pb[l].is_zero()) cs.push_back({i1 * m + j1, i2 * m + j2, k * m + l, pa[k] * pb[l]});
          }
        }
  return create(std::move(labels), std::move(unit), cs);
}

int FinDimAlgebra::dim() const { return static_cast<int>(data_->labels.size()); }
const std::vector<std::string>& FinDimAlgebra::labels() const { return data_->labels; }
const AlgVector& FinDimAlgebra::unit() const { return data_->unit; }

AlgVector FinDimAlgebra::basis_vector(int i) const {
  AlgVector v(static_cast<std::size_t>(dim()));
  v[i] = Rational(1);
  return v;
}

AlgVector FinDimAlgebra::multiply(const AlgVector& a, const AlgVector& b) const {
  const int n = dim();
  AlgVector out(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Rational ab = a[i] * b[j];
      const auto& prod = data_->table[i][j];
      for (int k = 0; k < n; ++k)
        if (!prod[k].is_zero()) out[k] += ab * prod[k];
    }
  }
  return out;
}

AlgVector FinDimAlgebra::power(const AlgVector& a, int t) const {
  AlgVector r = unit();
  for (int i = 0; i < t; ++i) r = multiply(r, a);
  return r;
}

DenseMatrix FinDimAlgebra::multiplication_matrix(const AlgVector& a) const {
  const int n = dim();
  DenseMatrix m(n, DenseVector(n));
  for (int j = 0; j < n; ++j) {
    AlgVector col = multiply(a, basis_vector(j));
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

std::string FinDimAlgebra::format(const AlgVector& v) const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    const bool negative = v[i].sign() < 0;
    const Rational magnitude = negative ? -v[i] : v[i];
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const auto& label = labels()[i];
    if (label == "1") {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + "*";
      out += label;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const FinDimAlgebra& ambient, const std::vector<AlgVector>& generators) {
  Subspace s(ambient);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient.dim()) throw ValidationError("generator has wrong length");
    s.echelon_.insert(to_sparse(g));
  }
  return s;
}

Subspace Subspace::whole(const FinDimAlgebra& ambient) {
  std::vector<AlgVector> gens;
  for (int i = 0; i < ambient.dim(); ++i) gens.push_back(ambient.basis_vector(i));
  return span(ambient, gens);
}

Subspace Subspace::zero(const FinDimAlgebra& ambient) { return Subspace(ambient); }

Subspace Subspace::parse(const FinDimAlgebra& ambient, std::string_view text) {
  std::vector<AlgVector> gens;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto words = split_words(strip_comment(text.substr(pos, end - pos)));
    pos = end + 1;
    if (words.empty()) continue;
    if (words[0] != "vector") throw ValidationError(location(line_no) + "unknown directive '" + words[0] + "'");
    if (static_cast<int>(words.size()) != ambient.dim() + 1)
      throw ValidationError(location(line_no) + "expected " + std::to_string(ambient.dim()) + " coordinates");
    AlgVector v;
    for (std::size_t i = 1; i < words.size(); ++i) v.push_back(parse_rational_or_throw(words[i], line_no));
    gens.push_back(std::move(v));
  }
  return span(ambient, gens);
}

std::vector<AlgVector> Subspace::basis() const {
  std::vector<AlgVector> out;
  for (const auto& row : echelon_.basis()) out.push_back(to_dense(row, ambient_.dim()));
  return out;
}

bool Subspace::contains(const AlgVector& v) const { return echelon_.contains(to_sparse(v)); }

AlgVector Subspace::reduce(const AlgVector& v) const {
  return to_dense(echelon_.reduce(to_sparse(v)), ambient_.dim());
}

bool Subspace::is_ideal() const {
  for (const auto& b : basis())
    for (int i = 0; i < ambient_.dim(); ++i)
      if (!contains(ambient_.multiply(b, ambient_.basis_vector(i)))) return false;
  return true;
}

bool Subspace::same_as(const Subspace& other) const {
  if (other.ambient_.dim() != ambient_.dim() || other.dimension() != dimension()) return false;
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// AlgebraHom

AlgebraHom AlgebraHom::create(FinDimAlgebra source, FinDimAlgebra target, DenseMatrix matrix) {
  if (static_cast<int>(matrix.size()) != target.dim())
    throw ValidationError("homomorphism matrix needs one row per target basis vector");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != source.dim())
      throw ValidationError("homomorphism matrix needs one column per source basis vector");
  AlgebraHom f(std::move(source), std::move(target), std::move(matrix));
  if (f.apply(f.source_.unit()) != f.target_.unit()) throw ValidationError("homomorphism must map 1 to 1");
  for (int i = 0; i < f.source_.dim(); ++i)
    for (int j = 0; j <= i; ++j) {
      AlgVector ei = f.source_.basis_vector(i), ej = f.source_.basis_vector(j);
      if (f.apply(f.source_.multiply(ei, ej)) != f.target_.multiply(f.apply(ei), f.apply(ej)))
        throw ValidationError("map is not multiplicative on (" + f.source_.labels()[i] + ", " +
                              f.source_.labels()[j] + ")");
    }
  return f;
}

AlgebraHom AlgebraHom::identity(const FinDimAlgebra& a) {
  DenseMatrix m(a.dim(), DenseVector(a.dim()));
  for (int i = 0; i < a.dim(); ++i) m[i][i] = Rational(1);
  return create(a, a, std::move(m));
}

AlgebraHom AlgebraHom::quotient(const FinDimAlgebra& a, const Subspace& ideal) {
  if (!ideal.is_ideal()) throw ValidationError("quotient requires an ideal");
  if (ideal.is_whole()) throw ValidationError("quotient by the whole algebra is the zero ring");
  // Quotient basis: the non-pivot coordinates of the reduced ideal basis.
  std::vector<bool> pivot(a.dim(), false);
  for (const auto& b : ideal.basis())
    for (int i = a.dim() - 1; i >= 0; --i)
      if (!b[i].is_zero()) {
        pivot[i] = true;
        break;
      }
  std::vector<int> keep;
  std::vector<int> position(a.dim(), -1);
  for (int i = 0; i < a.dim(); ++i)
    if (!pivot[i]) {
      position[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  const int q = static_cast<int>(keep.size());
  auto project = [&](const AlgVector& v) {
    AlgVector r = ideal.reduce(v);
    AlgVector out(q);
    for (int i = 0; i < a.dim(); ++i)
      if (!r[i].is_zero()) out[position[i]] = r[i];
    return out;
  };
  std::vector<std::string> labels;
  for (int i : keep) labels.push_back(a.labels()[i]);
  std::vector<FinDimAlgebra::Constant> cs;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      AlgVector p = project(a.multiply(a.basis_vector(keep[x]), a.basis_vector(keep[y])));
      for (int k = 0; k < q; ++k)
        if (!p[k].is_zero()) cs.push_back({x, y, k, p[k]});
    }
  FinDimAlgebra target = FinDimAlgebra::create(std::move(labels), project(a.unit()), cs);
  DenseMatrix m(q, DenseVector(a.dim()));
  for (int j = 0; j < a.dim(); ++j) {
    AlgVector col = project(a.basis_vector(j));
    for (int i = 0; i < q; ++i) m[i][j] = col[i];
  }
  return create(a, std::move(target), std::move(m));
}

AlgVector AlgebraHom::apply(const AlgVector& v) const {
  AlgVector out(target_.dim());
  for (int i = 0; i < target_.dim(); ++i)
    for (int j = 0; j < source_.dim(); ++j)
      if (!matrix_[i][j].is_zero() && !v[j].is_zero()) out[i] += matrix_[i][j] * v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Radicals and verdicts

Subspace nilradical(const FinDimAlgebra& a) {
  const int n = a.dim();
  DenseMatrix form(n, DenseVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      DenseMatrix l = a.multiplication_matrix(a.multiply(a.basis_vector(i), a.basis_vector(j)));
      Rational tr(0);
      for (int k = 0; k < n; ++k) tr += l[k][k];
      form[i][j] = tr;
    }
  Subspace s = Subspace::span(a, nullspace(form, n));
  for (const auto& b : s.basis())
    if (a.power(b, n) != a.zero()) throw std::logic_error("trace-form kernel element is not nilpotent");
  return s;
}

bool is_local(const FinDimAlgebra& a) { return a.dim() - nilradical(a).dimension() == 1; }

PowerWindow radical_window(const FinDimAlgebra& a) { return {a.dim(), 2 * a.dim() + 1}; }

bool radical_member(const AlgVector& a, const Subspace& u) {
  const auto& alg = u.ambient();
  const auto window = radical_window(alg);
  AlgVector p = alg.power(a, window.first);
  for (int t = window.first; t <= window.last; ++t) {
    if (!u.contains(p)) return false;
    p = alg.multiply(p, a);
  }
  return true;
}

bool strong_radical_member(const AlgVector& a, const Subspace& u) {
  const auto& alg = u.ambient();
  const auto window = radical_window(alg);
  AlgVector p = alg.power(a, window.first);
  for (int t = window.first; t <= window.last; ++t) {
    for (int i = 0; i < alg.dim(); ++i) {
      AlgVector bp = alg.multiply(alg.basis_vector(i), p);
      for (int j = 0; j <= i; ++j)  // commutative: b a^t c = c a^t b
        if (!u.contains(alg.multiply(bp, alg.basis_vector(j)))) return false;
    }
    p = alg.multiply(p, a);
  }
  return true;
}

Verdict mz_verdict(const Subspace& u) {
  const auto& alg = u.ambient();
  Subspace nil = nilradical(alg);
  Fields bounds{{"dim", std::to_string(alg.dim())}, {"subspace_dim", std::to_string(u.dimension())}};
  if (alg.dim() - nil.dimension() != 1) return Verdict::inconclusive("non-local ambient", bounds);
  if (!u.contains_unit())
    return Verdict::proved("structural: local ambient and 1 not in U, so U holds no nonzero idempotent",
                           {{"radical", "nilradical"}, {"radical_dim", std::to_string(nil.dimension())}},
                           bounds);
  if (u.is_whole()) return Verdict::proved("structural: U is the whole algebra", {}, bounds);
  // 1 lies in r(U); b * 1^t * 1 = b for every t, so any b outside U blocks sr(U).
  for (int i = 0; i < alg.dim(); ++i) {
    AlgVector b = alg.basis_vector(i);
    if (!u.contains(b))
      return Verdict::refuted("structural: 1 in r(U) but not in sr(U)",
                              {{"a", "1"}, {"b", alg.labels()[i]}, {"c", "1"}}, bounds);
  }
  throw std::logic_error("proper subspace contains every basis vector");
}

Subspace hom_preimage(const AlgebraHom& f, const Subspace& u) {
  // x lies in the preimage iff f(x) reduces to 0 modulo U.
  const int n = f.source().dim();
  const int m = f.target().dim();
  DenseMatrix reduced(m, DenseVector(n));
  for (int j = 0; j < n; ++j) {
    AlgVector r = u.reduce(f.apply(f.source().basis_vector(j)));
    for (int i = 0; i < m; ++i) reduced[i][j] = r[i];
  }
  return Subspace::span(f.source(), nullspace(reduced, n));
}

Subspace hom_image(const AlgebraHom& f, const Subspace& u) {
  std::vector<AlgVector> gens;
  for (const auto& b : u.basis()) gens.push_back(f.apply(b));
  return Subspace::span(f.target(), gens);
}

}  // namespace mzva
