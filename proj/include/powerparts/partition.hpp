#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <vector>

#include "powerparts/rational.hpp"

namespace powerparts {

/// Thrown when a request exceeds a configured size limit.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p^k(n) for 0 <= n <= limit.
struct PartitionTable {
    long k = 1;
    long limit = 0;
    std::vector<BigInt> values;

    const BigInt& operator[](long n) const { return values.at(static_cast<std::size_t>(n)); }
};

/// Default N guard: 2,000,000 for k = 1 and 200,000 for k >= 2. POWERPARTS_MAX_N overrides.
long max_table_size(long k);

/// Coin-change DP over the parts m^k <= N, parts in the outer loop.
PartitionTable count_table(long k, long n_max);

/// Process-wide memo of count_table, extended on demand. Thread-safe.
std::shared_ptr<const PartitionTable> shared_table(long k, long n_max);

/// Brute-force count by recursion over nonincreasing parts; n <= 120.
BigInt enumerate_oracle(long k, long n);

/// CSV lines "n,p_k_n".
void write_csv(const PartitionTable& table, std::ostream& os);

/// Binary cache: magic "PPKT", u32 version, u32 k, u64 limit, then length-prefixed hex values.
void write_binary(const PartitionTable& table, std::ostream& os);
PartitionTable read_binary(std::istream& is);

inline constexpr std::uint32_t kBinaryCacheVersion = 1;

} // namespace powerparts
