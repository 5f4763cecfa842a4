#include "powerparts/partition.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <string>

namespace powerparts {

long max_table_size(long k)
{
    if (const char* env = std::getenv("POWERPARTS_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return v;
    }
    return k == 1 ? 2'000'000 : 200'000;
}

PartitionTable count_table(long k, long n_max)
{
    if (k < 1) throw std::invalid_argument("count_table: k must be positive");
    if (n_max < 0) throw std::invalid_argument("count_table: N must be nonnegative");
    if (n_max > max_table_size(k)) {
        throw ResourceGuardError("count_table: N=" + std::to_string(n_max) + " exceeds limit " +
                                 std::to_string(max_table_size(k)) + " (set POWERPARTS_MAX_N)");
    }
    PartitionTable t;
    t.k = k;
    t.limit = n_max;
    t.values.assign(static_cast<std::size_t>(n_max + 1), BigInt(0));
    t.values[0] = 1;
    for (long m = 1;; ++m) {
        long part = 1;
        for (long i = 0; i < k; ++i) {
            part *= m;
            if (part > n_max) break;
        }
        if (part > n_max) break;
        for (long n = part; n <= n_max; ++n) {
            auto& dst = t.values[static_cast<std::size_t>(n)];
            mpz_add(dst.get_mpz_t(), dst.get_mpz_t(), t.values[static_cast<std::size_t>(n - part)].get_mpz_t());
        }
    }
    return t;
}

std::shared_ptr<const PartitionTable> shared_table(long k, long n_max)
{
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const PartitionTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[k];
    if (!slot || slot->limit < n_max) slot = std::make_shared<const PartitionTable>(count_table(k, n_max));
    return slot;
}

namespace {

unsigned long long enumerate(const std::vector<long>& parts, std::size_t idx, long remaining)
{
    if (remaining == 0) return 1;
    unsigned long long total = 0;
    // parts sorted decreasing; choose the largest part used next, at index >= idx
    for (std::size_t i = idx; i < parts.size(); ++i) {
        if (parts[i] <= remaining) total += enumerate(parts, i, remaining - parts[i]);
    }
    return total;
}

} // namespace

BigInt enumerate_oracle(long k, long n)
{
    if (k < 1) throw std::invalid_argument("enumerate_oracle: k must be positive");
    if (n < 0) return 0;
    if (n > 120) throw ResourceGuardError("enumerate_oracle: n > 120");
    std::vector<long> parts;
    for (long m = 1;; ++m) {
        long p = 1;
        for (long i = 0; i < k; ++i) p *= m;
        if (p > n) break;
        parts.push_back(p);
    }
    std::vector<long> desc(parts.rbegin(), parts.rend());
    return BigInt(std::to_string(enumerate(desc, 0, n)));
}

void write_csv(const PartitionTable& table, std::ostream& os)
{
    for (long n = 0; n <= table.limit; ++n) os << n << ',' << table[n].get_str() << '\n';
}

namespace {

template <class T>
void put(std::ostream& os, T v)
{
    unsigned char bytes[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get(std::istream& is)
{
    unsigned char bytes[sizeof(T)];
    if (!is.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw std::runtime_error("read_binary: truncated header");
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes[i]) << (8 * i);
    return v;
}

} // namespace

void write_binary(const PartitionTable& table, std::ostream& os)
{
    os.write("PPKT", 4);
    put<std::uint32_t>(os, kBinaryCacheVersion);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(table.k));
    put<std::uint64_t>(os, static_cast<std::uint64_t>(table.limit));
    for (const auto& v : table.values) {
        const std::string hex = v.get_str(16);
        put<std::uint32_t>(os, static_cast<std::uint32_t>(hex.size()));
        os.write(hex.data(), static_cast<std::streamsize>(hex.size()));
    }
}

PartitionTable read_binary(std::istream& is)
{
    char magic[4];
    if (!is.read(magic, 4) || std::string(magic, 4) != "PPKT") throw std::runtime_error("read_binary: bad magic");
    const auto version = get<std::uint32_t>(is);
    if (version != kBinaryCacheVersion) throw std::runtime_error("read_binary: unsupported version");
    PartitionTable t;
    t.k = get<std::uint32_t>(is);
    t.limit = static_cast<long>(get<std::uint64_t>(is));
    t.values.reserve(static_cast<std::size_t>(t.limit + 1));
    for (long n = 0; n <= t.limit; ++n) {
        const auto len = get<std::uint32_t>(is);
        std::string hex(len, '\0');
        if (!is.read(hex.data(), len)) throw std::runtime_error("read_binary: truncated value");
        t.values.emplace_back(hex, 16);
    }
    return t;
}

} // namespace powerparts
