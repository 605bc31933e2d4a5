#include "gwcell/bigint.hpp"
#include "gwcell/errors.hpp"

namespace gwcell {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  // acc * (n - i) is always divisible by (i + 1) at this point.
  for (long i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);
  }
  return acc;
}

namespace {
std::string join_keys(const std::vector<std::string>& keys) {
  std::string out = "missing base-theory keys:";
  for (const auto& k : keys) out += " " + k;
  return out;
}
}  // namespace

MissingKeysError::MissingKeysError(std::vector<std::string> keys)
    : DomainError(join_keys(keys)), keys_(std::move(keys)) {}

}  // namespace gwcell
