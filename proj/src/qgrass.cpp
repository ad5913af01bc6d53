#include "qgrass/qgrass.hpp"

#include "qgrass/concurrent_cache.hpp"
#include "qgrass/error.hpp"
#include "qgrass/linalg.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

namespace qgrass {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kCacheSchema = "qgrass.straightening/1";

using Content = std::vector<int>;

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

} // namespace

void check_ambient(Ambient a) {
  if (a.k < 1 || a.n <= a.k || a.n > 32)
    throw DomainError("ambient G(" + std::to_string(a.k) + "," + std::to_string(a.n) + ") needs 1 <= k < n <= 32");
}

// ---------------------------------------------------------------------------
// Plücker indices and words

PluckerIndex::PluckerIndex(Ambient a, const std::vector<int>& columns) : k_(a.k), n_(a.n) {
  check_ambient(a);
  if (static_cast<int>(columns.size()) != a.k)
    throw DomainError("Plücker index needs exactly " + std::to_string(a.k) + " columns");
  for (int c : columns) {
    if (c < 1 || c > a.n) throw DomainError("Plücker column " + std::to_string(c) + " out of range");
    std::uint32_t bit = 1u << (c - 1);
    if (mask_ & bit) throw DomainError("repeated Plücker column " + std::to_string(c));
    mask_ |= bit;
  }
}

PluckerIndex PluckerIndex::from_mask(Ambient a, std::uint32_t mask) {
  std::vector<int> cols;
  for (int c = 1; c <= a.n; ++c)
    if ((mask >> (c - 1)) & 1u) cols.push_back(c);
  if (a.n < 32 && (mask >> a.n) != 0) throw DomainError("Plücker mask has columns beyond n");
  return PluckerIndex(a, cols);
}

std::vector<int> PluckerIndex::columns() const {
  std::vector<int> cols;
  for (int c = 1; c <= n_; ++c)
    if (contains(c)) cols.push_back(c);
  return cols;
}

std::strong_ordering operator<=>(const PluckerIndex& a, const PluckerIndex& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  std::uint32_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint32_t low = diff & (~diff + 1u);
  return (a.mask_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

PluckerWord operator*(const PluckerWord& a, const PluckerWord& b) {
  PluckerWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

PluckerIndex leftmost(Ambient a) { return PluckerIndex(a, range(1, a.k)); }
PluckerIndex rightmost(Ambient a) { return PluckerIndex(a, range(a.n - a.k + 1, a.n)); }

const std::vector<PluckerIndex>& pluckers(Ambient a) {
  static std::mutex mu;
  static std::map<Ambient, std::vector<PluckerIndex>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(a);
  if (it != memo.end()) return it->second;
  check_ambient(a);
  std::vector<PluckerIndex> out;
  std::vector<bool> pick(static_cast<std::size_t>(a.n), false);
  std::fill(pick.begin(), pick.begin() + a.k, true);
  do {
    std::vector<int> cols;
    for (int c = 0; c < a.n; ++c)
      if (pick[static_cast<std::size_t>(c)]) cols.push_back(c + 1);
    out.emplace_back(a, cols);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return memo.emplace(a, std::move(out)).first->second;
}

bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b) {
  if (a.ambient() != b.ambient()) throw DomainError("plucker_leq: ambient mismatch");
  auto x = a.columns(), y = b.columns();
  for (std::size_t l = 0; l < x.size(); ++l)
    if (x[l] > y[l]) return false;
  return true;
}

bool is_standard(const PluckerWord& w) {
  for (std::size_t i = 1; i < w.factors.size(); ++i)
    if (!plucker_leq(w.factors[i - 1], w.factors[i])) return false;
  return true;
}

Weights weights(const PluckerIndex& i) {
  Ambient a = i.ambient();
  std::uint32_t u = leftmost(a).mask(), w = rightmost(a).mask();
  return {std::popcount(i.mask() & ~u), std::popcount(i.mask() & ~w)};
}

int weight_d(const PluckerWord& w) {
  int d = 0;
  for (const auto& f : w.factors) d += weights(f).d;
  return d;
}

std::vector<int> column_content(const PluckerWord& w, Ambient a) {
  std::vector<int> c(static_cast<std::size_t>(a.n), 0);
  for (const auto& f : w.factors)
    for (int col : f.columns()) ++c[static_cast<std::size_t>(col - 1)];
  return c;
}

// ---------------------------------------------------------------------------
// GrassElement

GrassElement GrassElement::scalar(Ambient a, const QRat& c) {
  GrassElement out(a);
  out.add_term(PluckerWord{}, c);
  return out;
}

GrassElement GrassElement::word(Ambient a, const PluckerWord& w, const QRat& c) {
  for (const auto& f : w.factors)
    if (f.ambient() != a) throw DomainError("word factor from a different ambient");
  GrassElement out(a);
  out.add_term(w, c);
  return out;
}

GrassElement GrassElement::generator(const PluckerIndex& i, const QRat& c) {
  return word(i.ambient(), PluckerWord{{i}}, c);
}

QRat GrassElement::coeff(const PluckerWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QRat(0) : it->second;
}

void GrassElement::add_term(const PluckerWord& w, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GrassElement GrassElement::operator-() const {
  GrassElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

GrassElement& GrassElement::operator+=(const GrassElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) ambient_ = o.ambient_;
  if (ambient_ != o.ambient_) throw DomainError("GrassElement: ambient mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GrassElement& GrassElement::operator-=(const GrassElement& o) { return *this += -o; }

GrassElement& GrassElement::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

bool GrassElement::is_standard() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return qgrass::is_standard(t.first); });
}

std::optional<int> GrassElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    if (d && *d != w.degree()) return std::nullopt;
    d = w.degree();
  }
  return d;
}

// ---------------------------------------------------------------------------
// Straightening engine

namespace {

struct Block {
  std::vector<std::size_t> cols;       // positions in the degree's standard list
  std::vector<QMMonomial> pivot_rows;  // PBW monomials used for the square solve
  Matrix pivot_matrix;                 // expansion restricted to pivot rows
  Matrix inverse;
};

struct DegreeData {
  int degree = 0;
  std::vector<PluckerWord> standard;
  std::map<PluckerWord, std::size_t> position;
  std::vector<QMElement> embeds;
  std::map<Content, Block> blocks;
  bool loaded_from_disk = false;
};

fs::path& cache_dir_storage() {
  static fs::path dir = [] {
    const char* env = std::getenv("QGRASS_CACHE_DIR");
    return env ? fs::path(env) : fs::path();
  }();
  return dir;
}

std::mutex& cache_dir_mutex() {
  static std::mutex m;
  return m;
}

fs::path cache_file(const fs::path& dir, Ambient a, int degree) {
  return dir / ("straighten-k" + std::to_string(a.k) + "-n" + std::to_string(a.n) + "-d" +
                std::to_string(degree) + ".json");
}

Content content_of(const QMMonomial& m, MatShape s) { return bicontent(m, s).cols; }

class Engine {
public:
  explicit Engine(Ambient a) : ambient_(a) {}

  Ambient ambient() const { return ambient_; }

  const DegreeData& degree(int d, ExecPolicy policy = ExecPolicy::parallel) {
    if (d < 0) throw DomainError("negative degree");
    {
      std::lock_guard lock(mu_);
      auto it = degrees_.find(d);
      if (it != degrees_.end()) return *it->second;
    }
    if (d > 1) degree(d - 1, policy);
    std::lock_guard build(build_mu_);
    {
      std::lock_guard lock(mu_);
      auto it = degrees_.find(d);
      if (it != degrees_.end()) return *it->second;
    }
    auto data = build_degree(d, policy);
    std::lock_guard lock(mu_);
    return *degrees_.emplace(d, std::move(data)).first->second;
  }

  // Writes an already built degree when its cache file is missing.
  void persist(const DegreeData& data) {
    fs::path dir = cache_directory();
    if (dir.empty() || data.degree < 2 || fs::exists(cache_file(dir, ambient_, data.degree))) return;
    store(data);
  }

  const QMElement& minor(const PluckerIndex& j) {
    return *minors_.get_or_compute(j.mask(), [&] {
      return std::make_shared<const QMElement>(quantum_minor(ambient_.shape(), range(1, ambient_.k), j.columns()));
    });
  }

  // Standard expansion of a PBW element of grassmannian degree d.
  GrassElement solve(const QMElement& x, int d) {
    GrassElement out(ambient_);
    if (x.is_zero()) return out;
    const DegreeData& data = degree(d);
    std::map<Content, QMElement> parts;
    for (const auto& [m, c] : x.terms()) {
      auto [it, ins] = parts.try_emplace(content_of(m, ambient_.shape()), ambient_.shape());
      it->second.add_term(m, c);
    }
    for (const auto& [content, part] : parts) {
      auto it = data.blocks.find(content);
      if (it == data.blocks.end())
        throw ConsistencyError("element is not in degree " + std::to_string(d) + " of the quantum grassmannian");
      const Block& b = it->second;
      Vector v(b.pivot_rows.size());
      for (std::size_t r = 0; r < b.pivot_rows.size(); ++r) v[r] = part.coeff(b.pivot_rows[r]);
      Vector sol = multiply(b.inverse, v);
      QMElement check(ambient_.shape());
      for (std::size_t c = 0; c < b.cols.size(); ++c) {
        if (sol[c].is_zero()) continue;
        check += data.embeds[b.cols[c]] * sol[c];
        out.add_term(data.standard[b.cols[c]], sol[c]);
      }
      if (!(check == part))
        throw ConsistencyError("element is not in degree " + std::to_string(d) + " of the quantum grassmannian");
    }
    return out;
  }

  const QMElement& embed_standard(const PluckerWord& s) {
    const DegreeData& data = degree(s.degree());
    auto it = data.position.find(s);
    if (it == data.position.end()) throw DomainError("embed_standard: word is not standard");
    return data.embeds[it->second];
  }

  GrassElement right(const PluckerWord& s, const PluckerIndex& j) {
    return right_.get_or_compute({s, j}, [&] { return solve(embed_standard(s) * minor(j), s.degree() + 1); });
  }

  GrassElement left(const PluckerIndex& j, const PluckerWord& s) {
    return left_.get_or_compute({s, j}, [&] { return solve(minor(j) * embed_standard(s), s.degree() + 1); });
  }

  StraightenStats stats() {
    StraightenStats st;
    std::lock_guard lock(mu_);
    st.degrees = degrees_.size();
    for (const auto& [d, data] : degrees_) st.blocks += data->blocks.size();
    st.memo_entries = right_.size() + left_.size();
    st.disk_loads = disk_loads_.load();
    return st;
  }

private:
  std::unique_ptr<DegreeData> build_degree(int d, ExecPolicy policy) {
    auto data = std::make_unique<DegreeData>();
    data->degree = d;
    MatShape shape = ambient_.shape();
    if (d == 0) {
      data->standard.push_back(PluckerWord{});
    } else if (d == 1) {
      for (const auto& p : pluckers(ambient_)) data->standard.push_back(PluckerWord{{p}});
    } else {
      const DegreeData& prev = *degrees_.at(d - 1);
      for (const auto& s : prev.standard)
        for (const auto& p : pluckers(ambient_))
          if (plucker_leq(s.factors.back(), p)) data->standard.push_back(s * PluckerWord{{p}});
    }
    for (std::size_t i = 0; i < data->standard.size(); ++i) data->position.emplace(data->standard[i], i);

    if (!load(*data)) {
      data->embeds.assign(data->standard.size(), QMElement(shape));
      const DegreeData* prev = d > 1 ? degrees_.at(d - 1).get() : nullptr;
      parallel_for(data->standard.size(), policy, [&](std::size_t i) {
        const PluckerWord& s = data->standard[i];
        if (d == 0) {
          data->embeds[i] = QMElement::scalar(shape, QRat(1));
        } else if (d == 1) {
          data->embeds[i] = minor(s.factors[0]);
        } else {
          PluckerWord prefix{{s.factors.begin(), s.factors.end() - 1}};
          data->embeds[i] = prev->embeds[prev->position.at(prefix)] * minor(s.factors.back());
        }
      });
      store(*data);
    }

    std::map<Content, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < data->standard.size(); ++i)
      groups[column_content(data->standard[i], ambient_)].push_back(i);
    std::vector<const Content*> keys;
    for (auto& [c, cols] : groups) {
      data->blocks[c].cols = cols;
      keys.push_back(&c);
    }
    parallel_for(keys.size(), policy, [&](std::size_t b) { build_block(*data, data->blocks.at(*keys[b])); });
    return data;
  }

  void build_block(const DegreeData& data, Block& b) {
    std::set<QMMonomial> rowset;
    for (auto c : b.cols)
      for (const auto& [m, x] : data.embeds[c].terms()) rowset.insert(m);
    std::vector<QMMonomial> rows(rowset.begin(), rowset.end());
    Matrix full(rows.size(), b.cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < b.cols.size(); ++c) full(r, c) = data.embeds[b.cols[c]].coeff(rows[r]);
    auto pick = independent_rows(full);
    if (pick.size() != b.cols.size())
      throw ConsistencyError("standard monomials are dependent in degree " + std::to_string(data.degree));
    for (auto r : pick) b.pivot_rows.push_back(rows[r]);
    b.pivot_matrix = full.select_rows(pick);
    b.inverse = inverse(b.pivot_matrix);
  }

  bool load(DegreeData& data) {
    fs::path dir = cache_directory();
    if (dir.empty() || data.degree < 2) return false;
    fs::path file = cache_file(dir, ambient_, data.degree);
    std::ifstream in(file);
    if (!in) return false;
    try {
      json j = json::parse(in);
      if (j.at("schema") != kCacheSchema || j.at("k") != ambient_.k || j.at("n") != ambient_.n ||
          j.at("degree") != data.degree)
        return false;
      const auto& mons = j.at("monomials");
      if (mons.size() != data.standard.size()) return false;
      std::vector<QMElement> embeds;
      embeds.reserve(mons.size());
      for (std::size_t i = 0; i < mons.size(); ++i) {
        if (mons[i].at("word").get<std::string>() != to_string(data.standard[i])) return false;
        QMElement e(ambient_.shape());
        for (const auto& [m, c] : mons[i].at("expansion").items())
          e.add_term(parse_monomial(m, ambient_.shape()), QRat::parse(c.get<std::string>()));
        embeds.push_back(std::move(e));
      }
      data.embeds = std::move(embeds);
      data.loaded_from_disk = true;
      ++disk_loads_;
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  void store(const DegreeData& data) {
    fs::path dir = cache_directory();
    if (dir.empty() || data.degree < 2) return;
    json j;
    j["schema"] = kCacheSchema;
    j["k"] = ambient_.k;
    j["n"] = ambient_.n;
    j["degree"] = data.degree;
    json mons = json::array();
    for (std::size_t i = 0; i < data.standard.size(); ++i) {
      json exp = json::object();
      for (const auto& [m, c] : data.embeds[i].terms()) exp[to_string(m, ambient_.shape())] = c.to_string();
      mons.push_back({{"word", to_string(data.standard[i])}, {"expansion", exp}});
    }
    j["monomials"] = std::move(mons);
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path file = cache_file(dir, ambient_, data.degree);
    std::ostringstream tag;
    tag << std::this_thread::get_id();
    fs::path tmp = file;
    tmp += ".tmp." + tag.str();
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << j.dump();
      if (!out) return;
    }
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
  }

  Ambient ambient_;
  std::mutex mu_;
  std::mutex build_mu_;
  std::map<int, std::unique_ptr<DegreeData>> degrees_;
  ConcurrentCache<std::uint32_t, std::shared_ptr<const QMElement>> minors_;
  ConcurrentCache<std::pair<PluckerWord, PluckerIndex>, GrassElement> right_;
  ConcurrentCache<std::pair<PluckerWord, PluckerIndex>, GrassElement> left_;
  std::atomic<std::size_t> disk_loads_{0};
};

std::mutex& engines_mutex() {
  static std::mutex m;
  return m;
}

std::map<Ambient, std::unique_ptr<Engine>>& engines() {
  static std::map<Ambient, std::unique_ptr<Engine>> e;
  return e;
}

Engine& engine(Ambient a) {
  check_ambient(a);
  std::lock_guard lock(engines_mutex());
  auto& slot = engines()[a];
  if (!slot) slot = std::make_unique<Engine>(a);
  return *slot;
}

} // namespace

// ---------------------------------------------------------------------------
// Public straightening API

QMElement embed(const PluckerWord& w, Ambient a) {
  Engine& e = engine(a);
  QMElement out = QMElement::scalar(a.shape(), QRat(1));
  for (const auto& f : w.factors) {
    if (f.ambient() != a) throw DomainError("embed: ambient mismatch");
    out = out * e.minor(f);
  }
  return out;
}

QMElement embed(const GrassElement& x) {
  QMElement out(x.ambient().shape());
  for (const auto& [w, c] : x.terms()) out += embed(w, x.ambient()) * c;
  return out;
}

GrassElement times_generator(const GrassElement& x, const PluckerIndex& j) {
  Ambient a = j.ambient();
  if (!x.is_zero() && x.ambient() != a) throw DomainError("times_generator: ambient mismatch");
  Engine& e = engine(a);
  GrassElement out(a);
  for (const auto& [s, c] : x.terms()) {
    if (!is_standard(s)) {
      out += times_generator(straighten(s, a), j) * c;
      continue;
    }
    out += e.right(s, j) * c;
  }
  return out;
}

GrassElement generator_times(const PluckerIndex& j, const GrassElement& x) {
  Ambient a = j.ambient();
  if (!x.is_zero() && x.ambient() != a) throw DomainError("generator_times: ambient mismatch");
  Engine& e = engine(a);
  GrassElement out(a);
  for (const auto& [s, c] : x.terms()) {
    if (!is_standard(s)) {
      out += generator_times(j, straighten(s, a)) * c;
      continue;
    }
    out += e.left(j, s) * c;
  }
  return out;
}

GrassElement straighten(const PluckerWord& w, Ambient a) {
  for (const auto& f : w.factors)
    if (f.ambient() != a) throw DomainError("straighten: ambient mismatch");
  if (w.degree() <= 1 || is_standard(w)) return GrassElement::word(a, w);
  GrassElement cur = GrassElement::generator(w.factors[0]);
  for (std::size_t i = 1; i < w.factors.size(); ++i) cur = times_generator(cur, w.factors[i]);
  return cur;
}

GrassElement straighten(const GrassElement& x) {
  GrassElement out(x.ambient());
  for (const auto& [w, c] : x.terms()) out += straighten(w, x.ambient()) * c;
  return out;
}

GrassElement straighten_direct(const PluckerWord& w, Ambient a) {
  return engine(a).solve(embed(w, a), w.degree());
}

GrassElement from_matrix_element(const QMElement& x, Ambient a, int degree) {
  if (x.shape() != a.shape()) throw DomainError("from_matrix_element: shape mismatch");
  return engine(a).solve(x, degree);
}

GrassElement mul(const GrassElement& a, const GrassElement& b) {
  if (a.is_zero() || b.is_zero()) return GrassElement(a.is_zero() ? a.ambient() : b.ambient());
  if (a.ambient() != b.ambient()) throw DomainError("mul: ambient mismatch");
  GrassElement left = a.is_standard() ? a : straighten(a);
  GrassElement out(a.ambient());
  for (const auto& [w, c] : b.terms()) {
    GrassElement cur = left;
    for (const auto& f : w.factors) cur = times_generator(cur, f);
    out += cur * c;
  }
  return out;
}

GrassElement operator*(const GrassElement& a, const GrassElement& b) { return mul(a, b); }

GrassElement commutator(const GrassElement& a, const GrassElement& b) { return mul(a, b) - mul(b, a); }

GrassElement graded_component(const GrassElement& x, int degree) {
  GrassElement out(x.ambient());
  for (const auto& [w, c] : x.terms())
    if (w.degree() == degree) out.add_term(w, c);
  return out;
}

const std::vector<PluckerWord>& standard_monomials(Ambient a, int degree) { return engine(a).degree(degree).standard; }

std::optional<std::size_t> standard_position(const PluckerWord& w, Ambient a) {
  const auto& data = engine(a).degree(w.degree());
  auto it = data.position.find(w);
  if (it == data.position.end()) return std::nullopt;
  return it->second;
}

std::set<PluckerWord> support(const GrassElement& x) {
  std::set<PluckerWord> out;
  for (const auto& [w, c] : x.terms()) out.insert(w);
  return out;
}

GrassElement quotient_mod_u(const GrassElement& x) {
  GrassElement out(x.ambient());
  PluckerIndex u = leftmost(x.ambient());
  for (const auto& [w, c] : x.terms())
    if (std::find(w.factors.begin(), w.factors.end(), u) == w.factors.end()) out.add_term(w, c);
  return out;
}

BasisCheck check_basis(Ambient a, int degree, ExecPolicy policy) {
  Engine& e = engine(a);
  const DegreeData& data = e.degree(degree, policy);
  BasisCheck out;
  out.degree = degree;
  out.standard = data.standard.size();
  out.blocks = data.blocks.size();
  out.independent = true;
  for (const auto& [c, b] : data.blocks)
    if (rank(b.pivot_matrix) != b.cols.size()) out.independent = false;

  const auto& gens = pluckers(a);
  std::size_t total = 1;
  for (int i = 0; i < degree; ++i) total *= gens.size();
  out.words = total;
  std::vector<char> ok(total, 0);
  parallel_for(total, policy, [&](std::size_t idx) {
    PluckerWord w;
    std::size_t rest = idx;
    for (int i = 0; i < degree; ++i) {
      w.factors.push_back(gens[rest % gens.size()]);
      rest /= gens.size();
    }
    std::reverse(w.factors.begin(), w.factors.end());
    try {
      QMElement x = embed(w, a);
      GrassElement s = e.solve(x, degree);
      ok[idx] = embed(s) == x ? 1 : 0;
    } catch (const ConsistencyError&) {
      ok[idx] = 0;
    }
  });
  out.spanning = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const PluckerIndex& i) {
  std::string out = "[";
  bool wide = i.ambient().n > 9;
  bool first = true;
  for (int c : i.columns()) {
    if (wide && !first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "]";
}

std::string to_string(const PluckerWord& w) {
  if (w.factors.empty()) return "1";
  std::string out;
  for (const auto& f : w.factors) out += to_string(f);
  return out;
}

std::string to_string(const GrassElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    std::string coeff = c.is_monomial() ? c.pretty() : "(" + c.pretty() + ")";
    if (w.factors.empty())
      out += coeff;
    else if (c.is_one())
      out += to_string(w);
    else
      out += coeff + " " + to_string(w);
  }
  return out;
}

PluckerIndex parse_plucker(const std::string& text, Ambient a) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("Plücker index must be bracketed: '" + text + "'");
  std::string body = text.substr(1, text.size() - 2);
  std::vector<int> cols;
  if (a.n > 9 || body.find(',') != std::string::npos) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw ParseError("bad Plücker column '" + item + "' in '" + text + "'");
      cols.push_back(std::stoi(item));
    }
  } else {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad character in '" + text + "'");
      cols.push_back(ch - '0');
    }
  }
  try {
    return PluckerIndex(a, cols);
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

PluckerWord parse_word(const std::string& text, Ambient a) {
  PluckerWord w;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "1") return w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto close = s.find(']', pos);
    if (s[pos] != '[' || close == std::string::npos) throw ParseError("malformed Plücker word '" + text + "'");
    w.factors.push_back(parse_plucker(s.substr(pos, close - pos + 1), a));
    pos = close + 1;
  }
  if (w.factors.empty()) throw ParseError("empty Plücker word");
  return w;
}

// ---------------------------------------------------------------------------
// Cache management

void set_cache_directory(const fs::path& dir) {
  std::lock_guard lock(cache_dir_mutex());
  cache_dir_storage() = dir;
}

fs::path cache_directory() {
  std::lock_guard lock(cache_dir_mutex());
  return cache_dir_storage();
}

std::vector<CacheEntry> list_cache(const fs::path& dir) {
  std::vector<CacheEntry> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    int k = 0, n = 0, d = 0;
    std::string name = entry.path().filename().string();
    if (std::sscanf(name.c_str(), "straighten-k%d-n%d-d%d.json", &k, &n, &d) != 3) continue;
    if (name != cache_file("", Ambient{k, n}, d).string()) continue;
    out.push_back({Ambient{k, n}, d, entry.path(), entry.file_size()});
  }
  std::sort(out.begin(), out.end(), [](const CacheEntry& x, const CacheEntry& y) {
    return std::tie(x.ambient, x.degree) < std::tie(y.ambient, y.degree);
  });
  return out;
}

std::size_t clear_cache(const fs::path& dir) {
  std::size_t removed = 0;
  for (const auto& e : list_cache(dir))
    if (fs::remove(e.file)) ++removed;
  return removed;
}

void warm_cache(Ambient a, int max_degree, ExecPolicy policy) {
  Engine& e = engine(a);
  for (int d = 1; d <= max_degree; ++d) e.persist(e.degree(d, policy));
}

void clear_straightening_memory() {
  std::lock_guard lock(engines_mutex());
  engines().clear();
}

StraightenStats straighten_stats(Ambient a) { return engine(a).stats(); }

} // namespace qgrass
