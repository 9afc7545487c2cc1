#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrb {

enum class Sign : uint8_t { Zero = 0, Plus = 1, Minus = 2 };

// Position vector over {0,+,-}: entry i records the side of hyperplane i.
// Ordered componentwise with 0 below both signs.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {}
  static SignVector zero(int t) { return SignVector(std::vector<Sign>(t, Sign::Zero)); }
  static SignVector parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  Sign operator[](int i) const { return entries_[i]; }
  const std::vector<Sign>& entries() const { return entries_; }

  // Entrywise: keep nonzero entries of *this, fill zeros from other.
  SignVector compose(const SignVector& other) const;
  bool leq(const SignVector& other) const;
  SignVector negated() const;
  bool is_zero() const;
  bool is_full() const;  // no zero entry

  std::string to_string() const;
  auto operator<=>(const SignVector&) const = default;

 private:
  std::vector<Sign> entries_;
};

// Letters for the complex position code. The partial order has four levels
// collapsed to three: 0 below + and -, each of +,- below each of i,j.
enum class CSign : uint8_t { Zero = 0, Plus = 1, Minus = 2, I = 3, J = 4 };

int csign_level(CSign s);
bool csign_less(CSign a, CSign b);

class ComplexSignVector {
 public:
  ComplexSignVector() = default;
  explicit ComplexSignVector(std::vector<CSign> entries) : entries_(std::move(entries)) {}
  static ComplexSignVector parse(const std::string& text);
  // X o iY for real X, Y: entry is i/j by the sign of Y where Y is nonzero,
  // else the entry of X.
  static ComplexSignVector from_real_pair(const SignVector& x, const SignVector& y);

  int size() const { return static_cast<int>(entries_.size()); }
  CSign operator[](int i) const { return entries_[i]; }

  // Entrywise: the other entry wins exactly when it is strictly above in the
  // letter order.
  ComplexSignVector compose(const ComplexSignVector& other) const;
  bool leq(const ComplexSignVector& other) const;
  bool has_zero() const;
  bool is_imaginary() const;  // every entry in {i,j}
  int level_sum() const;      // sum of entry levels, a sorting key

  std::string to_string() const;
  auto operator<=>(const ComplexSignVector&) const = default;

 private:
  std::vector<CSign> entries_;
};

}  // namespace lrb
