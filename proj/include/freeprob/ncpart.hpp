#ifndef FREEPROB_NCPART_HPP
#define FREEPROB_NCPART_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace freeprob
{

// Largest n for which NC(n) is enumerated unless the caller raises the cap.
inline constexpr int kDefaultNcCap = 12;

using Block = std::vector<int>;

// A non-crossing partition of {1..n}. Blocks are strictly increasing and
// sorted by their minimum; construction validates both the partition and the
// non-crossing property.
class NCPartition
{
public:
    NCPartition(int n, std::vector<Block> blocks);

    // 1_n, the single-block partition.
    static NCPartition one(int n);
    // 0_n, all singletons.
    static NCPartition zero(int n);

    int ground_size() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    // labels()[i-1] is the index of the block containing i.
    std::vector<int> labels() const;

    friend bool operator==(const NCPartition&, const NCPartition&) = default;
    // Ground size first, then lexicographic block signature.
    friend std::strong_ordering operator<=>(const NCPartition& a, const NCPartition& b);

private:
    struct trusted_tag {};
    NCPartition(int n, std::vector<Block> blocks, trusted_tag);

    int n_ = 0;
    std::vector<Block> blocks_;

    friend NCPartition make_trusted_partition(int, std::vector<Block>);
};

// "[[1,4],[2,3]]"
std::string to_string(const NCPartition& p);

// True iff the given partition of {1..n} has no crossing quadruple.
// Throws ValidationError if `blocks` is not a partition of {1..n}.
bool is_noncrossing(int n, const std::vector<Block>& blocks);

// All of NC(n), each exactly once, sorted by block signature.
// Throws SizeError for n < 1 or n > cap.
std::vector<NCPartition> enumerate_nc(int n, int cap = kDefaultNcCap);

NCPartition kreweras(const NCPartition& p);

// Relabels every element i as i + k (mod n, in 1..n).
NCPartition cyclic_shift(const NCPartition& p, int k);

// K(K(p)); checks that it equals p shifted by -1.
NCPartition kreweras_squared_shift(const NCPartition& p);

// Least upper bound in the NC lattice.
NCPartition nc_join(const NCPartition& p, const NCPartition& q);

// {{1..j1},{j1+1..j2},...}; cuts must be strictly increasing and end at n.
NCPartition interval_partition(int n, std::span<const int> cuts);

// Memoized NC(n) together with the Kreweras index of each partition.
struct NCTable
{
    int n = 0;
    std::vector<NCPartition> partitions;
    std::vector<std::size_t> kreweras_index;
    std::size_t zero_index = 0; // 0_n
    std::size_t one_index = 0;  // 1_n

    std::size_t index_of(const NCPartition& p) const;
};

// Thread-safe; the reference stays valid for the lifetime of the program.
const NCTable& nc_table(int n, int cap = kDefaultNcCap);

} // namespace freeprob

#endif
