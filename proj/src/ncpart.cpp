#include <freeprob/ncpart.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include <freeprob/errors.hpp>

namespace freeprob
{

namespace
{

std::vector<int> labels_of(int n, const std::vector<Block>& blocks)
{
    if (n < 1) {
        throw ValidationError("partition ground set must be non-empty");
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw ValidationError("partition has an empty block");
        }
        for (int e : blocks[b]) {
            if (e < 1 || e > n) {
                throw ValidationError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
            }
            auto& slot = label[static_cast<std::size_t>(e - 1)];
            if (slot != -1) {
                throw ValidationError("element " + std::to_string(e) + " appears twice");
            }
            slot = static_cast<int>(b);
        }
    }
    if (std::find(label.begin(), label.end(), -1) != label.end()) {
        throw ValidationError("blocks do not cover 1.." + std::to_string(n));
    }
    return label;
}

// Single left-to-right pass: a revisited block must be the innermost open one.
bool labels_noncrossing(const std::vector<int>& label)
{
    const auto n = label.size();
    const auto nblocks = static_cast<std::size_t>(*std::max_element(label.begin(), label.end())) + 1;
    std::vector<std::size_t> last(nblocks, 0);
    std::vector<bool> seen(nblocks, false);
    for (std::size_t i = 0; i < n; ++i) {
        last[static_cast<std::size_t>(label[i])] = i;
    }
    std::vector<int> open;
    for (std::size_t i = 0; i < n; ++i) {
        const auto b = static_cast<std::size_t>(label[i]);
        if (!seen[b]) {
            seen[b] = true;
            if (last[b] != i) {
                open.push_back(label[i]);
            }
            continue;
        }
        if (open.empty() || open.back() != label[i]) {
            return false;
        }
        if (last[b] == i) {
            open.pop_back();
        }
    }
    return true;
}

std::vector<Block> blocks_from_labels(const std::vector<int>& label)
{
    std::map<int, Block> by_label;
    for (std::size_t i = 0; i < label.size(); ++i) {
        by_label[label[i]].push_back(static_cast<int>(i) + 1);
    }
    std::vector<Block> out;
    out.reserve(by_label.size());
    for (auto& [l, b] : by_label) {
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return out;
}

void canonicalize(std::vector<Block>& blocks)
{
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

// Every non-crossing partition of the consecutive elements lo..hi; the block
// of lo cuts the rest into independent arcs.
void enumerate_interval(int lo, int hi, std::vector<std::vector<Block>>& out)
{
    if (lo > hi) {
        out.emplace_back();
        return;
    }
    // Choose the remaining elements of lo's block as an increasing subset of
    // lo+1..hi; the gaps are filled recursively.
    std::vector<int> chosen{lo};
    auto recurse = [&](auto&& self, int next) -> void {
        // Option: close the block here; the tail next..hi is an arc.
        {
            std::vector<std::vector<Block>> partial{{Block(chosen)}};
            // arcs between consecutive chosen elements
            for (std::size_t k = 0; k + 1 < chosen.size(); ++k) {
                std::vector<std::vector<Block>> arc;
                enumerate_interval(chosen[k] + 1, chosen[k + 1] - 1, arc);
                std::vector<std::vector<Block>> merged;
                for (const auto& a : partial) {
                    for (const auto& b : arc) {
                        auto c = a;
                        c.insert(c.end(), b.begin(), b.end());
                        merged.push_back(std::move(c));
                    }
                }
                partial = std::move(merged);
            }
            std::vector<std::vector<Block>> tail;
            enumerate_interval(chosen.back() + 1, hi, tail);
            for (const auto& a : partial) {
                for (const auto& b : tail) {
                    auto c = a;
                    c.insert(c.end(), b.begin(), b.end());
                    out.push_back(std::move(c));
                }
            }
        }
        for (int e = next; e <= hi; ++e) {
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, lo + 1);
}

} // namespace

NCPartition make_trusted_partition(int n, std::vector<Block> blocks)
{
    return NCPartition(n, std::move(blocks), NCPartition::trusted_tag{});
}

NCPartition::NCPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks))
{
    const auto label = labels_of(n_, blocks_);
    if (!labels_noncrossing(label)) {
        throw ValidationError("partition " + to_string(*this) + " is crossing");
    }
    canonicalize(blocks_);
}

NCPartition::NCPartition(int n, std::vector<Block> blocks, trusted_tag) : n_(n), blocks_(std::move(blocks))
{
    canonicalize(blocks_);
}

NCPartition NCPartition::one(int n)
{
    Block b(static_cast<std::size_t>(n));
    std::iota(b.begin(), b.end(), 1);
    return NCPartition(n, {std::move(b)});
}

NCPartition NCPartition::zero(int n)
{
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) {
        blocks.push_back({i});
    }
    return NCPartition(n, std::move(blocks));
}

std::vector<int> NCPartition::labels() const
{
    std::vector<int> label(static_cast<std::size_t>(n_));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int e : blocks_[b]) {
            label[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
        }
    }
    return label;
}

std::strong_ordering operator<=>(const NCPartition& a, const NCPartition& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0) {
        return c;
    }
    return a.blocks_ <=> b.blocks_;
}

std::string to_string(const NCPartition& p)
{
    std::string out = "[";
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b) {
            out += ',';
        }
        out += '[';
        for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(p.blocks()[b][i]);
        }
        out += ']';
    }
    return out + "]";
}

bool is_noncrossing(int n, const std::vector<Block>& blocks)
{
    return labels_noncrossing(labels_of(n, blocks));
}

std::vector<NCPartition> enumerate_nc(int n, int cap)
{
    if (n < 1 || n > cap) {
        throw SizeError("NC(n) enumeration needs 1 <= n <= " + std::to_string(cap) + ", got " + std::to_string(n));
    }
    std::vector<std::vector<Block>> raw;
    enumerate_interval(1, n, raw);
    std::vector<NCPartition> out;
    out.reserve(raw.size());
    for (auto& blocks : raw) {
        out.push_back(make_trusted_partition(n, std::move(blocks)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// With each block read as the cycle (v1 v2 ... vm) and gamma = (1 2 ... n),
// K(p) has the cycles of p^{-1} o gamma. Element i of K(p) stands for the
// point i-bar placed between i and i+1 on the interleaved circle.
NCPartition kreweras(const NCPartition& p)
{
    const int n = p.ground_size();
    std::vector<int> inverse(static_cast<std::size_t>(n) + 1);
    for (const auto& b : p.blocks()) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            const int from = b[k];
            const int to = b[(k + 1) % b.size()];
            inverse[static_cast<std::size_t>(to)] = from;
        }
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next_label = 0;
    for (int start = 1; start <= n; ++start) {
        if (label[static_cast<std::size_t>(start - 1)] != -1) {
            continue;
        }
        int i = start;
        while (label[static_cast<std::size_t>(i - 1)] == -1) {
            label[static_cast<std::size_t>(i - 1)] = next_label;
            const int gamma = i % n + 1;
            i = inverse[static_cast<std::size_t>(gamma)];
        }
        ++next_label;
    }
    return make_trusted_partition(n, blocks_from_labels(label));
}

NCPartition cyclic_shift(const NCPartition& p, int k)
{
    const int n = p.ground_size();
    std::vector<Block> blocks = p.blocks();
    for (auto& b : blocks) {
        for (int& e : b) {
            e = ((e - 1 + k) % n + n) % n + 1;
        }
    }
    return make_trusted_partition(n, std::move(blocks));
}

NCPartition kreweras_squared_shift(const NCPartition& p)
{
    auto result = kreweras(kreweras(p));
    if (result != cyclic_shift(p, -1)) {
        throw std::logic_error("K^2(p) is not the cyclic shift of " + to_string(p));
    }
    return result;
}

NCPartition nc_join(const NCPartition& p, const NCPartition& q)
{
    const int n = p.ground_size();
    if (q.ground_size() != n) {
        throw ValidationError("nc_join: ground sizes differ (" + std::to_string(n) + " vs "
                              + std::to_string(q.ground_size()) + ")");
    }
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (const auto* part : {&p, &q}) {
        for (const auto& b : part->blocks()) {
            for (std::size_t k = 1; k < b.size(); ++k) {
                unite(b[0] - 1, b[k] - 1);
            }
        }
    }
    // Merge crossing blocks until none remain.
    while (true) {
        std::vector<int> label(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            label[static_cast<std::size_t>(i)] = find(i);
        }
        bool merged = false;
        for (int a = 0; a < n && !merged; ++a) {
            for (int b = a + 1; b < n && !merged; ++b) {
                if (label[static_cast<std::size_t>(a)] == label[static_cast<std::size_t>(b)]) {
                    continue;
                }
                for (int c = b + 1; c < n && !merged; ++c) {
                    if (label[static_cast<std::size_t>(c)] != label[static_cast<std::size_t>(a)]) {
                        continue;
                    }
                    for (int d = c + 1; d < n; ++d) {
                        if (label[static_cast<std::size_t>(d)] == label[static_cast<std::size_t>(b)]) {
                            unite(a, b);
                            merged = true;
                            break;
                        }
                    }
                }
            }
        }
        if (!merged) {
            return make_trusted_partition(n, blocks_from_labels(label));
        }
    }
}

NCPartition interval_partition(int n, std::span<const int> cuts)
{
    if (n < 1 || cuts.empty() || cuts.back() != n) {
        throw ValidationError("interval cuts must be non-empty and end at n = " + std::to_string(n));
    }
    std::vector<Block> blocks;
    int start = 1;
    for (int cut : cuts) {
        if (cut < start) {
            throw ValidationError("interval cuts must be strictly increasing and >= 1");
        }
        Block b(static_cast<std::size_t>(cut - start + 1));
        std::iota(b.begin(), b.end(), start);
        blocks.push_back(std::move(b));
        start = cut + 1;
    }
    return make_trusted_partition(n, std::move(blocks));
}

std::size_t NCTable::index_of(const NCPartition& p) const
{
    auto it = std::lower_bound(partitions.begin(), partitions.end(), p);
    if (it == partitions.end() || *it != p) {
        throw ValidationError("partition " + to_string(p) + " is not in NC(" + std::to_string(n) + ")");
    }
    return static_cast<std::size_t>(it - partitions.begin());
}

const NCTable& nc_table(int n, int cap)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<NCTable>> cache;
    if (n < 1 || n > cap) {
        throw SizeError("NC(n) table needs 1 <= n <= " + std::to_string(cap) + ", got " + std::to_string(n));
    }
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto table = std::make_unique<NCTable>();
        table->n = n;
        table->partitions = enumerate_nc(n, cap);
        table->kreweras_index.reserve(table->partitions.size());
        for (const auto& p : table->partitions) {
            table->kreweras_index.push_back(table->index_of(kreweras(p)));
        }
        table->zero_index = table->index_of(NCPartition::zero(n));
        table->one_index = table->index_of(NCPartition::one(n));
        slot = std::move(table);
    }
    return *slot;
}

} // namespace freeprob
