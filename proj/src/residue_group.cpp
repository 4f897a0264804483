#include "ssc/gsp4.hpp"

namespace ssc::gsp4 {

namespace {

using Mat = std::array<std::uint32_t, 16>;

// Open-addressing set of base-q encoded matrices; 0 marks an empty slot, so
// codes are stored plus one.
class CodeSet {
 public:
  explicit CodeSet(std::uint64_t expected) {
    std::uint64_t cap = 1024;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, 0);
    mask_ = cap - 1;
  }

  bool insert(std::uint64_t code) {
    if (4 * (size_ + 1) > 3 * slots_.size()) grow();
    return put(code + 1);
  }
  std::uint64_t size() const { return size_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
  }
  bool put(std::uint64_t key) {
    for (std::uint64_t i = mix(key) & mask_;; i = (i + 1) & mask_) {
      if (slots_[i] == key) return false;
      if (slots_[i] == 0) {
        slots_[i] = key;
        ++size_;
        return true;
      }
    }
  }
  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    mask_ = slots_.size() - 1;
    size_ = 0;
    for (auto k : old)
      if (k) put(k);
  }

  std::vector<std::uint64_t> slots_;
  std::uint64_t mask_ = 0;
  std::uint64_t size_ = 0;
};

std::uint64_t encode(const Mat& m, std::uint32_t q) {
  std::uint64_t c = 0;
  for (auto x : m) c = c * q + x;
  return c;
}

Mat decode(std::uint64_t c, std::uint32_t q) {
  Mat m{};
  for (int k = 15; k >= 0; --k) {
    m[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(c % q);
    c /= q;
  }
  return m;
}

Mat mul(const Mat& a, const Mat& b, std::uint32_t q) {
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::uint32_t s = 0;
      for (int k = 0; k < 4; ++k) s += a[static_cast<std::size_t>(4 * i + k)] * b[static_cast<std::size_t>(4 * k + j)];
      r[static_cast<std::size_t>(4 * i + j)] = s % q;
    }
  return r;
}

Mat identity() {
  Mat m{};
  for (int k = 0; k < 4; ++k) m[static_cast<std::size_t>(5 * k)] = 1;
  return m;
}

Mat diag(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  Mat m{};
  m[0] = a;
  m[5] = b;
  m[10] = c;
  m[15] = d;
  return m;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  for (std::uint32_t x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw BadParameter("no inverse mod q");
}

std::uint32_t primitive_root(std::uint32_t q) {
  for (std::uint32_t g = 2; g < q; ++g) {
    std::uint32_t x = 1, order = 0;
    do {
      x = x * g % q;
      ++order;
    } while (x != 1);
    if (order == q - 1) return g;
  }
  throw BadParameter("no primitive root");
}

}  // namespace

std::uint64_t bfs_closure_size(int q, const std::vector<Mat>& generators, std::uint64_t cap) {
  const auto Q = static_cast<std::uint32_t>(q);
  CodeSet seen(std::min<std::uint64_t>(cap, 1u << 20));
  std::vector<std::uint64_t> order;
  const auto start = encode(identity(), Q);
  seen.insert(start);
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Mat g = decode(order[head], Q);
    for (const auto& s : generators) {
      const auto c = encode(mul(g, s, Q), Q);
      if (seen.insert(c)) {
        order.push_back(c);
        if (order.size() > cap)
          throw BudgetExceeded("closure exceeds " + std::to_string(cap) + " elements");
      }
    }
  }
  return order.size();
}

ResidueGroupOrders residue_group_order(int q, std::uint64_t cap) {
  if (!padic::is_supported_prime(q)) throw BadParameter("q must be an odd prime");
  const auto Q = static_cast<std::uint32_t>(q);
  const std::uint32_t g = primitive_root(Q);
  const std::uint32_t gi = inv_mod(g, Q);
  const std::uint32_t m1 = Q - 1;

  auto unip = [&](std::initializer_list<std::pair<int, std::uint32_t>> entries) {
    Mat m = identity();
    for (auto [k, v] : entries) m[static_cast<std::size_t>(k)] = v;
    return m;
  };
  // root elements for a1 and a2 and their negatives (row-major positions)
  const Mat xa1 = unip({{1, 1}, {11, m1}});
  const Mat xa2 = unip({{6, 1}});
  const Mat ya1 = unip({{4, 1}, {14, m1}});
  const Mat ya2 = unip({{9, 1}});
  const Mat xa12 = unip({{2, 1}, {7, 1}});
  const Mat xa211 = unip({{3, 1}});
  Mat s1{}, s2{};
  s1[1] = s1[4] = s1[11] = s1[14] = 1;
  s2[0] = s2[6] = s2[15] = 1;
  s2[9] = m1;

  std::vector<Mat> group_gens{diag(g, 1, 1, gi), diag(1, g, gi, 1), diag(1, 1, g, g), s1, s2, xa1, xa2, ya1, ya2};
  // scalars and the upper unipotent radical: the image of Z(o^x) K' mod p
  std::vector<Mat> image_gens{diag(g, g, g, g), xa1, xa2, xa12, xa211};

  ResidueGroupOrders r;
  r.group = bfs_closure_size(q, group_gens, cap);
  r.image = bfs_closure_size(q, image_gens, cap);
  return r;
}

}  // namespace ssc::gsp4
