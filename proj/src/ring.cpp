#include "ringtop/ring.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ringtop/kernels.hpp"

namespace ringtop {

namespace {

// Row-parallel O(n^3) sweep. check(x, y) returns the first violating z in
// row (x, y) or npos. Returns the lexicographically first violating triple,
// matching what a serial scan would report.
struct SweepHit {
  elem x = 0, y = 0;
  std::size_t z = kernels::npos;
  bool found = false;
};

template <typename RowCheck>
SweepHit row_sweep(std::uint32_t n, RowCheck check) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (n <= 256) threads = 1;

  std::atomic<std::uint32_t> next{0};
  std::atomic<std::uint32_t> best_x{n};
  std::vector<SweepHit> hits(threads);
  auto worker = [&](unsigned tid) {
    SweepHit& hit = hits[tid];
    for (;;) {
      const std::uint32_t x = next.fetch_add(1);
      if (x >= n || x > best_x.load(std::memory_order_relaxed)) return;
      for (std::uint32_t y = 0; y < n; ++y) {
        const std::size_t z = check(elem(x), elem(y));
        if (z != kernels::npos) {
          hit = {elem(x), elem(y), z, true};
          std::uint32_t seen = best_x.load();
          while (x < seen && !best_x.compare_exchange_weak(seen, x)) {
          }
          break;
        }
      }
      if (hit.found) return;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 1; tid < threads; ++tid) pool.emplace_back(worker, tid);
    worker(0);
    for (auto& th : pool) th.join();
  }
  SweepHit best;
  for (const SweepHit& h : hits)
    if (h.found && (!best.found || h.x < best.x ||
                    (h.x == best.x && h.y < best.y)))
      best = h;
  return best;
}

void check_order(std::uint32_t order) {
  if (order < 2)
    throw error("invalid-order",
                "ring order must be at least 2 (got " + std::to_string(order) +
                    "); the one-element ring with 0 = 1 is rejected");
  if (order > kMaxRingOrder)
    throw error("too-large", "ring order " + std::to_string(order) +
                                 " exceeds the cap of " +
                                 std::to_string(kMaxRingOrder));
}

std::vector<elem> pad_table(std::vector<elem> t) {
  t.push_back(0);  // gather kernels may touch 32 bits at the last entry
  return t;
}

// Exhaustive axiom sweep. Reports the first violation in a fixed check
// order so diagnostics are deterministic.
void validate(FiniteRing& r) {
  const std::uint32_t n = r.order;
  const auto& k = kernels::active();

  if (r.zero == r.one)
    throw error("invalid-order", "zero and one coincide (identity ring)");
  if (r.zero >= n || r.one >= n)
    throw axiom_error("table-range", "zero/one outside the element universe",
                      {});

  for (std::size_t i = 0; i < std::size_t(n) * n; ++i) {
    if (r.add_table()[i] >= n)
      throw axiom_error("table-range", "addition table entry out of range",
                        {elem(i / n), elem(i % n)});
    if (r.mul_table()[i] >= n)
      throw axiom_error("table-range", "multiplication table entry out of range",
                        {elem(i / n), elem(i % n)});
  }

  for (elem x = 0; x < n; ++x)
    for (elem y = 0; y < n; ++y)
      if (r.add(x, y) != r.add(y, x))
        throw axiom_error("add-commutativity", "x+y != y+x", {x, y});

  for (elem x = 0; x < n; ++x)
    if (r.add(r.zero, x) != x)
      throw axiom_error("add-identity", "0+x != x", {x});

  r.neg.assign(n, 0);
  for (elem x = 0; x < n; ++x) {
    const elem* row = r.add_row(x);
    const elem* hit = std::find(row, row + n, r.zero);
    if (hit == row + n)
      throw axiom_error("group-inverse", "no additive inverse for x", {x});
    r.neg[x] = elem(hit - row);
  }

  // (x+y)+z vs x+(y+z): row of x+y against row x gathered through row y.
  if (const SweepHit hit = row_sweep(n, [&](elem x, elem y) {
        return k.gather_mismatch(r.add_row(r.add(x, y)), r.add_row(x),
                                 r.add_row(y), n);
      });
      hit.found)
    throw axiom_error("add-associativity", "(x+y)+z != x+(y+z)",
                      {hit.x, hit.y, elem(hit.z)});

  for (elem x = 0; x < n; ++x) {
    if (r.mul(r.one, x) != x)
      throw axiom_error("mul-identity", "1*x != x", {x});
    if (r.mul(x, r.one) != x)
      throw axiom_error("mul-identity", "x*1 != x", {x});
  }

  if (const SweepHit hit = row_sweep(n, [&](elem x, elem y) {
        return k.gather_mismatch(r.mul_row(r.mul(x, y)), r.mul_row(x),
                                 r.mul_row(y), n);
      });
      hit.found)
    throw axiom_error("mul-associativity", "(x*y)*z != x*(y*z)",
                      {hit.x, hit.y, elem(hit.z)});

  // x*(y+z) vs x*y + x*z: mul row x through add row y, against the add row
  // of x*y gathered through mul row x.
  if (const SweepHit hit = row_sweep(n, [&](elem x, elem y) {
        return k.gather2_mismatch(r.mul_row(x), r.add_row(y),
                                  r.add_row(r.mul(x, y)), r.mul_row(x), n);
      });
      hit.found)
    throw axiom_error("distributivity-left", "x*(y+z) != x*y + x*z",
                      {hit.x, hit.y, elem(hit.z)});

  // (x+y)*z vs x*z + y*z: plain mul row of x+y against a 2-d gather of the
  // add table at (x*z, y*z).
  if (const SweepHit hit = row_sweep(n, [&](elem x, elem y) {
        return k.gather2d_mismatch(r.mul_row(r.add(x, y)), r.add_table(), n,
                                   r.mul_row(x), r.mul_row(y), n);
      });
      hit.found)
    throw axiom_error("distributivity-right", "(x+y)*z != x*z + y*z",
                      {hit.x, hit.y, elem(hit.z)});

  r.commutative = true;
  for (elem x = 0; x < n && r.commutative; ++x)
    for (elem y = 0; y < n; ++y)
      if (r.mul(x, y) != r.mul(y, x)) {
        r.commutative = false;
        break;
      }
}

std::vector<std::string> default_labels(std::uint32_t n) {
  std::vector<std::string> ls(n);
  for (std::uint32_t i = 0; i < n; ++i) ls[i] = std::to_string(i);
  return ls;
}

}  // namespace

std::optional<elem> FiniteRing::element_by_label(std::string_view s) const {
  auto it = by_label_.find(std::string(s));
  if (it != by_label_.end()) return it->second;
  return std::nullopt;
}

FiniteRing FiniteRing::from_tables(std::string spec, std::uint32_t order,
                                   std::vector<elem> add,
                                   std::vector<elem> mul, elem zero, elem one,
                                   std::vector<std::string> labels) {
  check_order(order);
  if (add.size() != std::size_t(order) * order ||
      mul.size() != std::size_t(order) * order)
    throw error("parse-error", "table size must be order*order");

  FiniteRing r;
  r.spec = std::move(spec);
  r.order = order;
  r.zero = zero;
  r.one = one;
  r.add_tab_ = pad_table(std::move(add));
  r.mul_tab_ = pad_table(std::move(mul));
  r.labels = labels.empty() ? default_labels(order) : std::move(labels);
  if (r.labels.size() != order)
    throw error("parse-error", "label count must equal ring order");
  validate(r);
  for (elem x = 0; x < order; ++x) {
    if (!r.by_label_.emplace(r.labels[x], x).second)
      throw error("parse-error", "duplicate element label: " + r.labels[x]);
  }
  return r;
}

FiniteRing build_zn(std::uint32_t n) {
  check_order(n);
  std::vector<elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      add[std::size_t(x) * n + y] = elem((x + y) % n);
      mul[std::size_t(x) * n + y] = elem((x * y) % n);
    }
  return FiniteRing::from_tables("zn:" + std::to_string(n), n, std::move(add),
                                 std::move(mul), 0, 1);
}

namespace {

// Mixed-radix digit view: element index <-> k*k matrix of base-ring digits,
// entry (i,j) at digit position i*k + j.
struct MatrixCodec {
  const FiniteRing& base;
  std::uint32_t k;

  std::vector<elem> digits(std::uint32_t index) const {
    std::vector<elem> d(std::size_t(k) * k);
    for (auto& v : d) {
      v = elem(index % base.order);
      index /= base.order;
    }
    return d;
  }
  std::uint32_t index(const std::vector<elem>& d) const {
    std::uint32_t ix = 0;
    for (std::size_t p = d.size(); p-- > 0;)
      ix = ix * base.order + d[p];
    return ix;
  }
  std::string label(const std::vector<elem>& d) const {
    std::string s = "[";
    for (std::uint32_t i = 0; i < k; ++i) {
      s += '[';
      for (std::uint32_t j = 0; j < k; ++j) {
        s += base.label(d[std::size_t(i) * k + j]);
        if (j + 1 < k) s += ',';
      }
      s += ']';
      if (i + 1 < k) s += ',';
    }
    s += ']';
    return s;
  }
};

}  // namespace

FiniteRing build_matrix_ring(const FiniteRing& base, std::uint32_t k) {
  if (k < 1) throw error("invalid-order", "matrix dimension must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t p = 0; p < k * k; ++p) {
    order *= base.order;
    if (order > kMaxRingOrder)
      throw error("too-large",
                  "matrix ring order " + std::to_string(base.order) + "^" +
                      std::to_string(k * k) + " exceeds the cap of " +
                      std::to_string(kMaxRingOrder));
  }
  const std::uint32_t n = std::uint32_t(order);
  MatrixCodec codec{base, k};

  std::vector<std::vector<elem>> digits(n);
  std::vector<std::string> labels(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    digits[x] = codec.digits(x);
    labels[x] = codec.label(digits[x]);
  }

  std::vector<elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<elem> d(std::size_t(k) * k);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto& a = digits[x];
      const auto& b = digits[y];
      for (std::size_t p = 0; p < d.size(); ++p) d[p] = base.add(a[p], b[p]);
      add[std::size_t(x) * n + y] = elem(codec.index(d));
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
          elem acc = base.zero;
          for (std::uint32_t t = 0; t < k; ++t)
            acc = base.add(acc, base.mul(a[std::size_t(i) * k + t],
                                         b[std::size_t(t) * k + j]));
          d[std::size_t(i) * k + j] = acc;
        }
      mul[std::size_t(x) * n + y] = elem(codec.index(d));
    }

  std::vector<elem> one_digits(std::size_t(k) * k, base.zero);
  for (std::uint32_t i = 0; i < k; ++i)
    one_digits[std::size_t(i) * k + i] = base.one;

  return FiniteRing::from_tables(
      "m" + std::to_string(k) + ":" + base.spec, n, std::move(add),
      std::move(mul), 0, elem(codec.index(one_digits)), std::move(labels));
}

FiniteRing build_upper_triangular(const FiniteRing& base) {
  const std::uint64_t order = std::uint64_t(base.order) * base.order *
                              base.order;
  if (order > kMaxRingOrder)
    throw error("too-large", "upper-triangular ring order " +
                                 std::to_string(order) + " exceeds the cap of " +
                                 std::to_string(kMaxRingOrder));
  const std::uint32_t m = base.order;
  const std::uint32_t n = std::uint32_t(order);

  // (a,b,c) encodes [[a,b],[0,c]] at index a + b*m + c*m^2.
  auto ix = [m](elem a, elem b, elem c) {
    return std::uint32_t(a) + std::uint32_t(b) * m + std::uint32_t(c) * m * m;
  };
  std::vector<elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const elem a = elem(x % m), b = elem((x / m) % m), c = elem(x / (m * m));
    labels[x] = "[[" + base.label(a) + "," + base.label(b) + "],[" +
                base.label(base.zero) + "," + base.label(c) + "]]";
    for (std::uint32_t y = 0; y < n; ++y) {
      const elem a2 = elem(y % m), b2 = elem((y / m) % m),
                 c2 = elem(y / (m * m));
      add[std::size_t(x) * n + y] =
          elem(ix(base.add(a, a2), base.add(b, b2), base.add(c, c2)));
      mul[std::size_t(x) * n + y] =
          elem(ix(base.mul(a, a2),
                  base.add(base.mul(a, b2), base.mul(b, c2)),
                  base.mul(c, c2)));
    }
  }
  return FiniteRing::from_tables(
      "ut:" + base.spec, n, std::move(add), std::move(mul), 0,
      elem(ix(base.one, base.zero, base.one)), std::move(labels));
}

FiniteRing build_product(const FiniteRing& r1, const FiniteRing& r2) {
  const std::uint64_t order = std::uint64_t(r1.order) * r2.order;
  if (order > kMaxRingOrder)
    throw error("too-large", "product ring order " + std::to_string(order) +
                                 " exceeds the cap of " +
                                 std::to_string(kMaxRingOrder));
  const std::uint32_t n = std::uint32_t(order);
  auto ix = [&](elem x, elem y) {
    return std::uint32_t(x) * r2.order + std::uint32_t(y);
  };
  std::vector<elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (elem x1 = 0; x1 < r1.order; ++x1)
    for (elem y1 = 0; y1 < r2.order; ++y1) {
      const std::uint32_t x = ix(x1, y1);
      labels[x] = "(" + r1.label(x1) + "," + r2.label(y1) + ")";
      for (elem x2 = 0; x2 < r1.order; ++x2)
        for (elem y2 = 0; y2 < r2.order; ++y2) {
          const std::uint32_t y = ix(x2, y2);
          add[std::size_t(x) * n + y] =
              elem(ix(r1.add(x1, x2), r2.add(y1, y2)));
          mul[std::size_t(x) * n + y] =
              elem(ix(r1.mul(x1, x2), r2.mul(y1, y2)));
        }
    }
  return FiniteRing::from_tables(
      "prod:" + r1.spec + "," + r2.spec, n, std::move(add), std::move(mul),
      elem(ix(r1.zero, r2.zero)), elem(ix(r1.one, r2.one)), std::move(labels));
}

FiniteRing build_from_tables(std::uint32_t order, std::vector<elem> add,
                             std::vector<elem> mul, elem zero, elem one,
                             std::vector<std::string> labels,
                             std::string spec) {
  return FiniteRing::from_tables(std::move(spec), order, std::move(add),
                                 std::move(mul), zero, one, std::move(labels));
}

bool is_idempotent(const FiniteRing& r, elem e) { return r.mul(e, e) == e; }

std::vector<elem> idempotents(const FiniteRing& r) {
  std::vector<elem> out;
  for (elem e = 0; e < r.order; ++e)
    if (is_idempotent(r, e)) out.push_back(e);
  return out;
}

SubsetMask left_set(const FiniteRing& r, elem a) {
  return action_image(r, a, ActionSide::right);
}

SubsetMask action_image(const FiniteRing& r, elem a, ActionSide side) {
  SubsetMask m(r.order);
  for (elem x = 0; x < r.order; ++x)
    m.set(side == ActionSide::right ? r.mul(x, a) : r.mul(a, x));
  return m;
}

PierceSplit pierce_decompose(const FiniteRing& r, elem e, ActionSide side) {
  if (!is_idempotent(r, e))
    throw error("not-idempotent",
                "element " + r.label(e) + " is not idempotent", {e});
  const elem f = r.one_minus(e);
  PierceSplit split{e, side, action_image(r, e, side),
                    action_image(r, f, side), false};

  // Direct-sum proof: the component projections recombine to the identity
  // and all |fixed|*|kernel| pair sums are distinct, so decomposition is
  // unique.
  auto proj = [&](elem x, elem p) {
    return side == ActionSide::right ? r.mul(x, p) : r.mul(p, x);
  };
  bool ok = (split.fixed_part & split.kernel_part) ==
            SubsetMask::single(r.order, r.zero);
  for (elem x = 0; x < r.order && ok; ++x)
    ok = r.add(proj(x, e), proj(x, f)) == x;
  if (ok) {
    std::vector<char> seen(r.order, 0);
    std::size_t distinct = 0;
    split.fixed_part.for_each([&](elem u) {
      split.kernel_part.for_each([&](elem v) {
        const elem s = r.add(u, v);
        if (!seen[s]) {
          seen[s] = 1;
          ++distinct;
        }
      });
    });
    ok = distinct == split.fixed_part.count() * split.kernel_part.count() &&
         distinct == r.order;
  }
  split.direct_sum_verified = ok;
  return split;
}

}  // namespace ringtop
