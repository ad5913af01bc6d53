#include "qgrass/hh1solver.hpp"

#include "qgrass/error.hpp"
#include "qgrass/linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

namespace qgrass {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Relation kernel

const RelationKernel& relation_kernel(Ambient a, int degree, ExecPolicy policy) {
  if (degree < 2) throw DomainError("relation kernel needs degree >= 2");
  static std::mutex mu;
  static std::map<std::pair<Ambient, int>, std::unique_ptr<RelationKernel>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find({a, degree});
    if (it != memo.end()) return *it->second;
  }
  std::vector<PluckerWord> words;
  const auto& gens = pluckers(a);
  if (degree == 2) {
    for (const auto& x : gens)
      for (const auto& y : gens) words.push_back(PluckerWord{{x, y}});
  } else {
    for (const auto& s : standard_monomials(a, degree - 1))
      for (const auto& g : gens) {
        PluckerWord w = s;
        w.factors.push_back(g);
        words.push_back(std::move(w));
      }
  }
  // Every standard monomial occurs among the words, so the non-standard
  // words minus their normal forms span the kernel.
  std::vector<std::optional<GrassElement>> rel(words.size());
  parallel_for(words.size(), policy, [&](std::size_t i) {
    if (is_standard(words[i])) return;
    rel[i] = GrassElement::word(a, words[i]) - straighten(words[i], a);
  });
  auto out = std::make_unique<RelationKernel>();
  out->ambient = a;
  out->degree = degree;
  out->words = words.size();
  for (auto& r : rel)
    if (r) out->basis.push_back(std::move(*r));
  std::lock_guard lock(mu);
  auto [it, inserted] = memo.try_emplace({a, degree}, std::move(out));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Blocks

namespace {

using Content = std::vector<int>;

struct Unknown {
  PluckerIndex g;
  PluckerWord b;
};

struct Block {
  int shift = 0;
  Content delta;
  std::vector<Unknown> unknowns;
  std::map<PluckerIndex, std::vector<std::size_t>> by_generator;
};

Content operator-(const Content& x, const Content& y) {
  Content out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

std::string content_text(const Content& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

std::vector<Block> blocks_for_shift(Ambient a, int shift) {
  if (shift < -1) return {};
  std::map<Content, Block> blocks;
  for (const auto& g : pluckers(a)) {
    Content cg = column_content(PluckerWord{{g}}, a);
    for (const auto& b : standard_monomials(a, 1 + shift)) {
      Content delta = column_content(b, a) - cg;
      Block& blk = blocks[delta];
      blk.shift = shift;
      blk.delta = delta;
      blk.by_generator[g].push_back(blk.unknowns.size());
      blk.unknowns.push_back({g, b});
    }
  }
  std::vector<Block> out;
  for (auto& [d, blk] : blocks) out.push_back(std::move(blk));
  return out;
}

/// Rows D(r) = 0 for every kernel element r of the given degree, columns the block unknowns.
Matrix constraint_rows(Ambient a, const Block& blk, int degree) {
  const auto& kernel = relation_kernel(a, degree);
  const std::size_t nu = blk.unknowns.size();
  Matrix out(0, nu);
  for (const auto& r : kernel.basis) {
    std::vector<GrassElement> vals(nu, GrassElement(a));
    for (const auto& [w, c] : r.terms())
      for (std::size_t pos = 0; pos < w.factors.size(); ++pos) {
        auto it = blk.by_generator.find(w.factors[pos]);
        if (it == blk.by_generator.end()) continue;
        for (std::size_t j : it->second) {
          PluckerWord x{{w.factors.begin(), w.factors.begin() + static_cast<std::ptrdiff_t>(pos)}};
          x.factors.insert(x.factors.end(), blk.unknowns[j].b.factors.begin(), blk.unknowns[j].b.factors.end());
          x.factors.insert(x.factors.end(), w.factors.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.factors.end());
          vals[j] += straighten(x, a) * c;
        }
      }
    std::map<PluckerWord, std::vector<QRat>> rows;
    for (std::size_t j = 0; j < nu; ++j)
      for (const auto& [w, c] : vals[j].terms()) {
        auto [it, ins] = rows.try_emplace(w, nu);
        it->second[j] = c;
      }
    for (auto& [w, row] : rows) out.append_row(row);
  }
  return out;
}

Matrix stack(const std::vector<Matrix>& parts, std::size_t cols, std::size_t upto) {
  Matrix out(0, cols);
  for (std::size_t i = 0; i < upto && i < parts.size(); ++i)
    for (std::size_t r = 0; r < parts[i].rows(); ++r) out.append_row(parts[i].row(r));
  return out;
}

/// Coefficients of d in the block coordinates; nullopt if d has terms outside the block.
std::optional<Vector> vectorise(const GrassDerivation& d, const Block& blk) {
  Vector v(blk.unknowns.size());
  for (const auto& [g, img] : d.images) {
    auto it = blk.by_generator.find(g);
    for (const auto& [w, c] : img.terms()) {
      bool found = false;
      if (it != blk.by_generator.end())
        for (std::size_t j : it->second)
          if (blk.unknowns[j].b == w) {
            v[j] = c;
            found = true;
            break;
          }
      if (!found) return std::nullopt;
    }
  }
  return v;
}

GrassDerivation devectorise(Ambient a, const Block& blk, const Vector& v) {
  GrassDerivation d(a, blk.shift);
  std::map<PluckerIndex, GrassElement> imgs;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    auto [it, ins] = imgs.try_emplace(blk.unknowns[j].g, a);
    it->second.add_term(blk.unknowns[j].b, v[j]);
  }
  for (auto& [g, x] : imgs) d.set(g, x);
  return d;
}

bool annihilates(const Matrix& m, const Vector& v) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!dot(m.row(r), v).is_zero()) return false;
  return true;
}

std::size_t rank_of(const std::vector<Vector>& vs, std::size_t cols) {
  if (vs.empty()) return 0;
  Matrix m(0, cols);
  for (const auto& v : vs) m.append_row(v);
  return rank(m);
}

struct BlockResult {
  std::vector<Matrix> per_degree;  // degrees 2..cap
  std::vector<Vector> der;
  std::map<int, std::size_t> der_by_cap;
  std::vector<Vector> inner;       // ad_z vectors
  std::size_t inner_rank = 0;
  bool inner_contained = true;
  bool closure = true;
  bool spec_ok = true;
  std::vector<std::string> labels;
  std::vector<Vector> coset;
};

void solve_block(Ambient a, const Block& blk, int cap, const std::optional<mpq_class>& q0,
                 const std::vector<GrassElement>& zs, BlockResult& res) {
  const std::size_t nu = blk.unknowns.size();
  for (int d = 2; d <= cap; ++d) res.per_degree.push_back(constraint_rows(a, blk, d));
  for (int c = 2; c < cap; ++c) {
    Matrix m = stack(res.per_degree, nu, static_cast<std::size_t>(c - 1));
    res.der_by_cap[c] = nu - (m.rows() ? rank(m) : 0);
  }
  Matrix full = stack(res.per_degree, nu, res.per_degree.size());
  if (full.rows() == 0) {
    for (std::size_t j = 0; j < nu; ++j) {
      Vector e(nu);
      e[j] = QRat(1);
      res.der.push_back(e);
    }
  } else {
    res.der = nullspace(full);
  }
  res.der_by_cap[cap] = res.der.size();
  if (q0 && full.rows() > 0) {
    try {
      res.spec_ok = rank_at(full, *q0) == nu - res.der.size();
    } catch (const EvaluationError&) {
      res.spec_ok = false;
    }
  }

  for (const auto& z : zs) {
    auto v = vectorise(inner(z), blk);
    if (!v) {
      res.inner_contained = false;
      continue;
    }
    if (!annihilates(full, *v)) res.inner_contained = false;
    res.inner.push_back(std::move(*v));
  }
  res.inner_rank = rank_of(res.inner, nu);

  // Coset representatives: column derivations first, then kernel vectors.
  std::vector<Vector> current = res.inner;
  std::size_t r = res.inner_rank;
  auto try_add = [&](const Vector& v, const std::string& label) {
    if (r >= res.der.size()) return;
    current.push_back(v);
    std::size_t r2 = rank_of(current, nu);
    if (r2 > r) {
      r = r2;
      res.coset.push_back(v);
      res.labels.push_back(label);
    } else {
      current.pop_back();
    }
  };
  bool zero_delta = std::all_of(blk.delta.begin(), blk.delta.end(), [](int x) { return x == 0; });
  if (blk.shift == 0 && zero_delta)
    for (int i = 1; i <= a.n; ++i)
      if (auto v = vectorise(column_derivation(a, i), blk)) try_add(*v, "D_" + std::to_string(i));
  for (std::size_t j = 0; j < res.der.size(); ++j)
    try_add(res.der[j], "delta" + content_text(blk.delta) + "#" + std::to_string(j));

  for (const auto& c : res.coset) {
    if (!annihilates(full, c)) res.closure = false;
    for (const auto& v : res.inner) {
      Vector s = c;
      for (std::size_t j = 0; j < nu; ++j) s[j] += v[j];
      if (!annihilates(full, s)) res.closure = false;
    }
  }
}

std::map<Content, std::vector<GrassElement>> inner_generators(Ambient a, int shift) {
  std::map<Content, std::vector<GrassElement>> out;
  if (shift < 1) return out;  // degree-0 z gives zero
  for (const auto& z : standard_monomials(a, shift)) out[column_content(z, a)].push_back(GrassElement::word(a, z));
  return out;
}

struct ShiftWork {
  int shift = 0;
  std::vector<Block> blocks;
  std::vector<BlockResult> results;
};

std::vector<ShiftWork> run(Ambient a, const std::vector<int>& shifts, int cap, ExecPolicy policy,
                           const std::optional<mpq_class>& q0) {
  for (int d = 2; d <= cap; ++d) relation_kernel(a, d, policy);
  std::vector<ShiftWork> work;
  std::vector<std::map<Content, std::vector<GrassElement>>> zs;
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (int s : shifts) {
    ShiftWork w;
    w.shift = s;
    w.blocks = blocks_for_shift(a, s);
    w.results.resize(w.blocks.size());
    for (std::size_t b = 0; b < w.blocks.size(); ++b) jobs.emplace_back(work.size(), b);
    work.push_back(std::move(w));
    zs.push_back(inner_generators(a, s));
  }
  // Warm the straightening tables up to the largest degree any job touches.
  int top = 0;
  for (int s : shifts) top = std::max(top, cap + s);
  if (top >= 2) warm_cache(a, top, policy);
  static const std::vector<GrassElement> none;
  parallel_for(jobs.size(), policy, [&](std::size_t i) {
    auto [w, b] = jobs[i];
    const Block& blk = work[w].blocks[b];
    auto it = zs[w].find(blk.delta);
    solve_block(a, blk, cap, q0, it == zs[w].end() ? none : it->second, work[w].results[b]);
  });
  return work;
}

} // namespace

DerivationSpace solve_der_space(Ambient a, int shift, int cap, const SolveOptions& opt) {
  if (cap < 2) throw DomainError("cap must be at least 2");
  auto work = run(a, {shift}, cap, opt.policy, opt.specialisation);
  DerivationSpace out{a, shift, cap, {}};
  const auto& w = work.front();
  for (std::size_t b = 0; b < w.blocks.size(); ++b)
    for (const auto& v : w.results[b].der) {
      GrassDerivation d = devectorise(a, w.blocks[b], v);
      d.verified_degree = cap;
      out.basis.push_back(std::move(d));
    }
  return out;
}

DerivationSpace inner_space(Ambient a, int shift, ExecPolicy policy) {
  DerivationSpace out{a, shift, 0, {}};
  auto zs = inner_generators(a, shift);
  std::vector<std::vector<GrassDerivation>> per(zs.size());
  std::vector<const std::vector<GrassElement>*> groups;
  for (const auto& [c, v] : zs) groups.push_back(&v);
  parallel_for(groups.size(), policy, [&](std::size_t i) {
    std::vector<GrassDerivation> ds;
    for (const auto& z : *groups[i]) ds.push_back(inner(z));
    // Keep an independent subset; all members share one content block.
    std::map<std::pair<PluckerIndex, PluckerWord>, std::size_t> coord;
    for (const auto& d : ds)
      for (const auto& [g, x] : d.images)
        for (const auto& [w, c] : x.terms()) coord.try_emplace({g, w}, coord.size());
    Matrix m(0, coord.size());
    for (const auto& d : ds) {
      std::vector<QRat> row(coord.size());
      for (const auto& [g, x] : d.images)
        for (const auto& [w, c] : x.terms()) row[coord.at({g, w})] = c;
      m.append_row(row);
    }
    if (coord.empty()) return;
    for (std::size_t r : independent_rows(m)) per[i].push_back(ds[r]);
  });
  for (auto& v : per)
    for (auto& d : v) out.basis.push_back(std::move(d));
  return out;
}

std::vector<PluckerIndex> column_test_vectors(Ambient a) {
  std::vector<PluckerIndex> out;
  std::vector<int> base;
  for (int i = 1; i <= a.k - 1; ++i) base.push_back(i);
  for (int r = 1; r <= a.n + 1 - a.k; ++r) {
    auto cols = base;
    cols.push_back(a.k - 1 + r);
    out.emplace_back(a, cols);
  }
  for (int r = 0; r <= a.n - a.k; ++r) {
    std::vector<int> cols{a.n - a.k + 1 - r};
    for (int c = a.n - a.k + 2; c <= a.n; ++c) cols.push_back(c);
    out.emplace_back(a, cols);
  }
  return out;
}

HH1Report hh1_window(Ambient a, const std::vector<int>& shifts, int cap, const WindowOptions& opt) {
  check_ambient(a);
  if (a.k < 2 || a.k > a.n - 2) throw PreconditionError("HH^1 window needs 2 <= k <= n-2");
  if (cap < 2) throw DomainError("cap must be at least 2");
  auto work = run(a, shifts, cap, opt.policy, opt.specialisation);

  HH1Report rep;
  rep.ambient = a;
  rep.cap = cap;
  rep.specialisation = opt.specialisation;
  rep.cap_label = "relations checked in degrees 2.." + std::to_string(cap);
  rep.limitation =
      "Der is computed from relations of degree <= " + std::to_string(cap) +
      "; this bounds the true space from above and is exact once the ideal is generated in that range";

  std::mt19937_64 rng(opt.seed);
  for (const auto& w : work) {
    ShiftRecord rec;
    rec.shift = w.shift;
    rec.blocks = w.blocks.size();
    rec.inner_contained = true;
    rec.closure = true;
    rec.leibniz = true;
    std::ostringstream cert;
    cert << a.k << ',' << a.n << ';' << w.shift << ';' << cap << ';';
    for (std::size_t b = 0; b < w.blocks.size(); ++b) {
      const auto& r = w.results[b];
      rec.dim_der += r.der.size();
      rec.dim_inn += r.inner_rank;
      for (const auto& [c, d] : r.der_by_cap) rec.dim_der_by_cap[c] += d;
      rec.inner_contained = rec.inner_contained && r.inner_contained;
      rec.closure = rec.closure && r.closure;
      rec.specialisation_agrees = rec.specialisation_agrees && r.spec_ok;
      rec.coset_labels.insert(rec.coset_labels.end(), r.labels.begin(), r.labels.end());
      cert << content_text(w.blocks[b].delta) << ':' << r.der.size() << '/' << r.inner_rank << '[';
      for (const auto& v : r.der) {
        for (const auto& c : v) cert << c.to_string() << ' ';
        cert << '|';
      }
      cert << ']';
      // Random products on the first few basis derivations of the block.
      std::size_t tested = 0;
      for (const auto& v : r.der) {
        if (tested++ >= 2) break;
        GrassDerivation d = devectorise(a, w.blocks[b], v);
        for (int s = 0; s < opt.leibniz_samples; ++s) {
          // Total degree up to cap + 1, one past the certified range.
          int da = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
          int db = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap + 1 - da));
          const auto& ma = standard_monomials(a, da);
          const auto& mb = standard_monomials(a, db);
          GrassElement x = GrassElement::word(a, ma[rng() % ma.size()]);
          GrassElement y = GrassElement::word(a, mb[rng() % mb.size()]);
          if (!leibniz_holds(d, x, y)) rec.leibniz = false;
        }
      }
    }
    rec.dim_hh1 = rec.dim_der - rec.dim_inn;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(cert.str())));
    rec.certificate = hex;
    rep.shifts.push_back(std::move(rec));
  }

  if (std::find(shifts.begin(), shifts.end(), 0) != shifts.end()) {
    // D_i acts on [I_r], [J_r] by 0/1 eigenvalues; degree-0 inner derivations vanish.
    auto vs = column_test_vectors(a);
    Matrix m(0, vs.size());
    for (int i = 1; i <= a.n; ++i) {
      std::vector<QRat> row;
      for (const auto& v : vs) row.push_back(QRat(v.contains(i) ? 1 : 0));
      m.append_row(row);
    }
    rep.column_independence = rank(m) == static_cast<std::size_t>(a.n);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Degree-preserving derivations of quantum matrices

std::vector<QMDerivation> qm_derivation_space(MatShape s, bool kill_rightmost_minor, ExecPolicy policy) {
  check_shape(s);
  const int ng = s.size();
  const std::size_t nu = static_cast<std::size_t>(ng * ng);
  std::vector<std::pair<std::vector<int>, QMElement>> relations;
  for (int h = 0; h < ng; ++h)
    for (int g = 0; g < h; ++g) {
      QMElement nf = gen(s, s.row(h), s.col(h)) * gen(s, s.row(g), s.col(g));
      relations.push_back({{h, g}, nf});
    }
  std::optional<QMElement> minor;
  if (kill_rightmost_minor) {
    if (s.m >= s.n) throw PreconditionError("rightmost minor needs m < n");
    std::vector<int> rows, cols;
    for (int i = 1; i <= s.m; ++i) rows.push_back(i);
    for (int j = s.n - s.m + 1; j <= s.n; ++j) cols.push_back(j);
    minor = quantum_minor(s, rows, cols);
  }
  // Column u = (g, h): the derivation x_g -> x_h.
  std::vector<std::vector<QMElement>> cols(nu);
  parallel_for(nu, policy, [&](std::size_t u) {
    QMDerivation e(s);
    int g = static_cast<int>(u) / ng, h = static_cast<int>(u) % ng;
    e.set(g, gen(s, s.row(h), s.col(h)));
    for (const auto& [word, nf] : relations) {
      QMElement v = apply_word(e, word);
      for (const auto& [mon, c] : nf.terms()) v -= apply_word(e, mon.word()) * c;
      cols[u].push_back(v);
    }
    if (minor) cols[u].push_back(apply(e, *minor));
  });
  Matrix m(0, nu);
  const std::size_t nc = cols.empty() ? 0 : cols.front().size();
  for (std::size_t c = 0; c < nc; ++c) {
    std::map<QMMonomial, std::vector<QRat>> rows;
    for (std::size_t u = 0; u < nu; ++u)
      for (const auto& [mon, x] : cols[u][c].terms()) {
        auto [it, ins] = rows.try_emplace(mon, nu);
        it->second[u] = x;
      }
    for (auto& [mon, row] : rows) m.append_row(row);
  }
  std::vector<QMDerivation> out;
  for (const auto& v : nullspace(m)) {
    QMDerivation d(s);
    for (std::size_t u = 0; u < nu; ++u)
      if (!v[u].is_zero()) {
        int g = static_cast<int>(u) / ng, h = static_cast<int>(u) % ng;
        d.set(g, d.image(g) + gen(s, s.row(h), s.col(h)) * v[u]);
      }
    out.push_back(std::move(d));
  }
  return out;
}

} // namespace qgrass
