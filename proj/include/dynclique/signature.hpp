#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dynclique/errors.hpp"
#include "dynclique/ttt.hpp"

namespace dynclique {

/// "1,2,3": decimal IDs ascending, comma separated, no trailing delimiter.
inline std::string canonical_string(std::span<const VertexId> c)
{
    if (!is_canonical(c))
        throw PreconditionError("clique is not strictly ascending");
    std::string out;
    out.reserve(c.size() * 4);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0)
            out.push_back(',');
        out += std::to_string(c[i]);
    }
    return out;
}

/// MurmurHash64A (Austin Appleby). Input bytes are read little-endian so the
/// value does not depend on host byte order.
inline std::uint64_t murmur64a(std::string_view key, std::uint64_t seed)
{
    constexpr std::uint64_t m = 0xc6a4a7935bd1e995ULL;
    constexpr int r = 47;

    std::uint64_t h = seed ^ (static_cast<std::uint64_t>(key.size()) * m);
    const auto* data = reinterpret_cast<const unsigned char*>(key.data());
    std::size_t blocks = key.size() / 8;

    for (std::size_t b = 0; b < blocks; ++b) {
        std::uint64_t k = 0;
        for (int i = 7; i >= 0; --i)
            k = (k << 8) | data[b * 8 + static_cast<std::size_t>(i)];
        k *= m;
        k ^= k >> r;
        k *= m;
        h ^= k;
        h *= m;
    }

    const unsigned char* tail = data + blocks * 8;
    switch (key.size() & 7) {
    case 7: h ^= static_cast<std::uint64_t>(tail[6]) << 48; [[fallthrough]];
    case 6: h ^= static_cast<std::uint64_t>(tail[5]) << 40; [[fallthrough]];
    case 5: h ^= static_cast<std::uint64_t>(tail[4]) << 32; [[fallthrough]];
    case 4: h ^= static_cast<std::uint64_t>(tail[3]) << 24; [[fallthrough]];
    case 3: h ^= static_cast<std::uint64_t>(tail[2]) << 16; [[fallthrough]];
    case 2: h ^= static_cast<std::uint64_t>(tail[1]) << 8; [[fallthrough]];
    case 1:
        h ^= static_cast<std::uint64_t>(tail[0]);
        h *= m;
    }

    h ^= h >> r;
    h *= m;
    h ^= h >> r;
    return h;
}

/// Pinned so signatures and snapshots are stable across runs.
inline constexpr std::uint64_t signature_seed = 0x5eed'c1a9'0e5d'2017ULL;

struct CliqueSignature {
    std::uint64_t value = 0;

    friend bool operator==(const CliqueSignature&, const CliqueSignature&) = default;
    friend auto operator<=>(const CliqueSignature&, const CliqueSignature&) = default;
};

struct CliqueSignatureHash {
    std::size_t operator()(CliqueSignature s) const noexcept { return static_cast<std::size_t>(s.value); }
};

inline CliqueSignature signature_of_string(std::string_view canonical)
{
    return {murmur64a(canonical, signature_seed)};
}

inline CliqueSignature signature(std::span<const VertexId> c)
{
    return signature_of_string(canonical_string(c));
}

/// Net change in the maximal clique set: new_cliques are maximal only after
/// the update, del_cliques only before it.
struct ChangeSet {
    std::vector<Clique> new_cliques;
    std::vector<Clique> del_cliques;

    bool empty() const noexcept { return new_cliques.empty() && del_cliques.empty(); }
    std::size_t size() const noexcept { return new_cliques.size() + del_cliques.size(); }
};

enum class SignatureMode {
    fast,    ///< hashes only
    strict,  ///< canonical strings kept too; a collision throws
};

/// Set of signatures of the current maximal cliques.
class CliqueRegistry {
public:
    explicit CliqueRegistry(SignatureMode mode = SignatureMode::fast) : mode_(mode) {}

    SignatureMode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return signatures_.size(); }
    bool empty() const noexcept { return signatures_.empty(); }

    bool contains(CliqueSignature s) const { return signatures_.contains(s); }

    bool contains(std::span<const VertexId> c) const
    {
        std::string key = canonical_string(c);
        return contains_checked(signature_of_string(key), key);
    }

    /// Returns false if already present.
    bool insert(std::span<const VertexId> c)
    {
        std::string key = canonical_string(c);
        CliqueSignature s = signature_of_string(key);
        if (mode_ == SignatureMode::strict) {
            auto it = strings_.find(s);
            if (it != strings_.end() && it->second != key)
                throw SignatureCollisionError("signature collision between {" + it->second +
                                              "} and {" + key + "}");
        }
        bool inserted = signatures_.insert(s).second;
        if (inserted && mode_ == SignatureMode::strict)
            strings_.emplace(s, std::move(key));
        return inserted;
    }

    void insert(CliqueSignature s) { signatures_.insert(s); }

    /// Staged removals and additions, validated and applied together by
    /// commit(). Lets callers stream cliques out while the registry still
    /// answers membership for the pre-update graph.
    class Transaction {
    public:
        explicit Transaction(CliqueRegistry& registry) : registry_(registry) {}

        void remove(std::span<const VertexId> c) { removals_.push_back(entry(c)); }
        void add(std::span<const VertexId> c) { additions_.push_back(entry(c)); }

        /// All-or-nothing: throws RegistryError (or SignatureCollisionError in
        /// strict mode) and leaves the registry untouched if a removal is missing
        /// or an addition already present.
        void commit()
        {
            std::unordered_set<CliqueSignature, CliqueSignatureHash> removed;
            for (const Entry& e : removals_) {
                if (!registry_.contains_entry(e))
                    throw RegistryError("subsumed clique {" + e.text + "} not registered");
                if (!removed.insert(e.sig).second)
                    throw RegistryError("subsumed clique {" + e.text + "} listed twice");
            }
            std::unordered_set<CliqueSignature, CliqueSignatureHash> added;
            for (const Entry& e : additions_) {
                if (registry_.contains_entry(e))
                    throw RegistryError("new clique {" + e.text + "} already registered");
                if (!added.insert(e.sig).second)
                    throw RegistryError("new clique {" + e.text + "} listed twice");
            }
            for (const Entry& e : removals_) {
                registry_.signatures_.erase(e.sig);
                registry_.strings_.erase(e.sig);
            }
            for (Entry& e : additions_) {
                registry_.signatures_.insert(e.sig);
                if (registry_.mode_ == SignatureMode::strict)
                    registry_.strings_.emplace(e.sig, std::move(e.text));
            }
            removals_.clear();
            additions_.clear();
        }

    private:
        struct Entry {
            CliqueSignature sig;
            std::string text;
        };

        static Entry entry(std::span<const VertexId> c)
        {
            std::string text = canonical_string(c);
            CliqueSignature sig = signature_of_string(text);
            return {sig, std::move(text)};
        }

        CliqueRegistry& registry_;
        std::vector<Entry> removals_;
        std::vector<Entry> additions_;
    };

    /// Removes Λ^del, adds Λ^new. All-or-nothing.
    void apply(const ChangeSet& change)
    {
        Transaction tx(*this);
        for (const Clique& c : change.del_cliques)
            tx.remove(c);
        for (const Clique& c : change.new_cliques)
            tx.add(c);
        tx.commit();
    }

    std::vector<CliqueSignature> sorted_signatures() const
    {
        std::vector<CliqueSignature> out(signatures_.begin(), signatures_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    template <class Range>
    static CliqueRegistry from_cliques(const Range& cliques, SignatureMode mode = SignatureMode::fast)
    {
        CliqueRegistry r(mode);
        for (const auto& c : cliques)
            r.insert(c);
        return r;
    }

    friend bool operator==(const CliqueRegistry& a, const CliqueRegistry& b)
    {
        return a.signatures_ == b.signatures_;
    }

private:
    bool contains_checked(CliqueSignature s, const std::string& key) const
    {
        if (!signatures_.contains(s))
            return false;
        if (mode_ == SignatureMode::strict) {
            auto it = strings_.find(s);
            if (it != strings_.end() && it->second != key)
                throw SignatureCollisionError("signature collision between {" + it->second +
                                              "} and {" + key + "}");
        }
        return true;
    }

    template <class E>
    bool contains_entry(const E& e) const
    {
        return contains_checked(e.sig, e.text);
    }

    SignatureMode mode_;
    std::unordered_set<CliqueSignature, CliqueSignatureHash> signatures_;
    std::unordered_map<CliqueSignature, std::string, CliqueSignatureHash> strings_;
};

/// Free-function form of CliqueRegistry::apply.
inline void registry_update(CliqueRegistry& r, const ChangeSet& change) { r.apply(change); }

// Snapshot layout: 8-byte magic, u64 count, then count u64 hashes ascending.
// All integers little-endian.
inline constexpr std::string_view snapshot_magic{"DCLQREG1", 8};

namespace detail {

inline void put_u64(std::string& out, std::uint64_t x)
{
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

inline std::uint64_t get_u64(std::string_view in, std::size_t pos)
{
    std::uint64_t x = 0;
    for (int i = 7; i >= 0; --i)
        x = (x << 8) | static_cast<unsigned char>(in[pos + static_cast<std::size_t>(i)]);
    return x;
}

}  // namespace detail

inline std::string registry_snapshot(const CliqueRegistry& r)
{
    std::string out(snapshot_magic);
    auto sigs = r.sorted_signatures();
    detail::put_u64(out, sigs.size());
    for (CliqueSignature s : sigs)
        detail::put_u64(out, s.value);
    return out;
}

/// Restored registries carry hashes only, even in strict mode.
inline CliqueRegistry registry_restore(std::string_view bytes, SignatureMode mode = SignatureMode::fast)
{
    if (bytes.size() < snapshot_magic.size() || bytes.substr(0, snapshot_magic.size()) != snapshot_magic)
        throw SnapshotHeaderError("registry snapshot: bad magic header");
    if (bytes.size() < 16)
        throw SnapshotTruncatedError("registry snapshot: truncated count");
    std::uint64_t count = detail::get_u64(bytes, 8);
    std::size_t body = bytes.size() - 16;
    if (body / 8 < count)
        throw SnapshotTruncatedError("registry snapshot: expected " + std::to_string(count) +
                                     " hashes, found " + std::to_string(body / 8));
    if (body != count * 8)
        throw SnapshotCorruptError("registry snapshot: trailing bytes");
    CliqueRegistry r(mode);
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t h = detail::get_u64(bytes, 16 + i * 8);
        if (i != 0 && h <= prev)
            throw SnapshotCorruptError("registry snapshot: hashes not strictly ascending");
        r.insert(CliqueSignature{h});
        prev = h;
    }
    return r;
}

}  // namespace dynclique
