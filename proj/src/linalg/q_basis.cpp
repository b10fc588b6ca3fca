#include "treealg/linalg/q_basis.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "dense_basis.hpp"
#include "treealg/error.hpp"

namespace treealg::linalg {

namespace {

constexpr std::int64_t small_bound = std::int64_t{1} << 30;

struct SmallOps {
  using T = std::int64_t;

  std::shared_ptr<std::atomic<bool>> overflow = std::make_shared<std::atomic<bool>>(false);

  static void divide_content(std::vector<T>& v) {
    T g = 0;
    for (auto x : v) {
      g = std::gcd(g, x);
    }
    if (g > 1) {
      for (auto& x : v) {
        x /= g;
      }
    }
  }

  void eliminate(std::vector<T>& v, std::vector<T> const& row, std::size_t pivot, bool keep) const {
    if (overflow->load(std::memory_order_relaxed)) {
      return;
    }
    T const g = std::gcd(row[pivot], v[pivot]);
    T const a = row[pivot] / g;
    T const c = v[pivot] / g;
    T       m = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = a * v[j] - c * row[j];
      m    = std::max(m, std::abs(v[j]));
    }
    if (keep || m > small_bound) {
      divide_content(v);
      m = 0;
      for (auto x : v) {
        m = std::max(m, std::abs(x));
      }
      if (m > small_bound) {
        overflow->store(true, std::memory_order_relaxed);
      }
    }
  }

  void normalize(std::vector<T>& v, std::size_t pivot) const {
    divide_content(v);
    if (v[pivot] < 0) {
      for (auto& x : v) {
        x = -x;
      }
    }
  }
};

struct BigOps {
  using T = exact::BigInt;

  static void divide_content(std::vector<T>& v) {
    T g = 0;
    for (auto const& x : v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
      for (auto& x : v) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      }
    }
  }

  void eliminate(std::vector<T>& v, std::vector<T> const& row, std::size_t pivot, bool) const {
    T g;
    mpz_gcd(g.get_mpz_t(), row[pivot].get_mpz_t(), v[pivot].get_mpz_t());
    T const a = row[pivot] / g;
    T const c = v[pivot] / g;
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = a * v[j] - c * row[j];
    }
    divide_content(v);
  }

  void normalize(std::vector<T>& v, std::size_t pivot) const {
    divide_content(v);
    if (v[pivot] < 0) {
      for (auto& x : v) {
        x = -x;
      }
    }
  }
};

std::optional<std::vector<std::int64_t>> to_small(IntVec const& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] > small_bound || v[j] < -small_bound) {
      return std::nullopt;
    }
    out[j] = v[j].get_si();
  }
  return out;
}

IntVec to_big(std::vector<std::int64_t> const& v) {
  IntVec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = static_cast<long>(v[j]);
  }
  return out;
}

}  // namespace

struct QBasis::Impl {
  std::size_t                               length;
  std::vector<IntVec>                       history;
  std::optional<detail::DenseBasis<SmallOps>> small;
  std::optional<detail::DenseBasis<BigOps>>   big;

  void go_big() {
    small.reset();
    big.emplace(BigOps{}, length);
    big->insert(history, Exec::serial);
  }
};

QBasis::QBasis(std::size_t length) : _length(length), _impl(std::make_unique<Impl>()) {
  _impl->length = length;
  _impl->small.emplace(SmallOps{}, length);
}

QBasis::~QBasis()                            = default;
QBasis::QBasis(QBasis&&) noexcept            = default;
QBasis& QBasis::operator=(QBasis&&) noexcept = default;

std::size_t QBasis::dim() const noexcept {
  return _impl->small ? _impl->small->dim() : _impl->big->dim();
}

bool QBasis::uses_bigint() const noexcept { return !_impl->small; }

IntVec QBasis::row(std::size_t i) const {
  return _impl->small ? to_big(_impl->small->row(i)) : _impl->big->row(i);
}

bool QBasis::contains(IntVec const& v) const {
  if (v.size() != _length) {
    throw_invalid("vector length does not match the basis");
  }
  if (_impl->small) {
    if (auto s = to_small(v)) {
      _impl->small->reduce(*s);
      if (!_impl->small->ops().overflow->load()) {
        return std::all_of(s->begin(), s->end(), [](std::int64_t x) { return x == 0; });
      }
      _impl->go_big();
    } else {
      _impl->go_big();
    }
  }
  IntVec tmp = v;
  _impl->big->reduce(tmp);
  return std::all_of(tmp.begin(), tmp.end(), [](exact::BigInt const& x) { return x == 0; });
}

std::vector<IntVec> QBasis::insert(std::vector<IntVec> batch, Exec exec) {
  for (auto const& v : batch) {
    if (v.size() != _length) {
      throw_invalid("vector length does not match the basis");
    }
  }
  if (_impl->small) {
    std::vector<std::vector<std::int64_t>> small_batch;
    bool                                   fits = true;
    for (auto const& v : batch) {
      auto s = to_small(v);
      if (!s) {
        fits = false;
        break;
      }
      small_batch.push_back(std::move(*s));
    }
    if (fits) {
      auto added = _impl->small->insert(std::move(small_batch), exec);
      if (!_impl->small->ops().overflow->load()) {
        _impl->history.insert(_impl->history.end(), batch.begin(), batch.end());
        std::vector<IntVec> out;
        for (auto const& a : added) {
          out.push_back(to_big(a));
        }
        return out;
      }
    }
    _impl->go_big();
  }
  _impl->history.insert(_impl->history.end(), batch.begin(), batch.end());
  return _impl->big->insert(std::move(batch), exec);
}

}  // namespace treealg::linalg
