#include "regrank/snapshot.hpp"

#include <cstring>
#include <fstream>

#include <zlib.h>

#include "regrank/errors.hpp"

namespace regrank {

namespace {

constexpr std::uint32_t kMagic = 0x52475053; // "RGPS"
constexpr std::uint32_t kVersion = 1;

// Every section is framed as (id, payload length, crc32, payload) so a
// truncated or corrupted file is rejected before anything is exposed.
enum SectionId : std::uint32_t {
    kHeader = 1,
    kUserLabels = 2,
    kItemLabels = 3,
    kPrefs = 4,
    kReps = 5,
    kAdjacency = 6,
    kDangling = 7,
    kEnd = 0xffffffff,
};

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw SnapshotError("cannot open snapshot file for writing: " + path);
    }

    void raw(const void* data, std::size_t n) {
        out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    }

    template <typename T>
    void pod(const T& v) {
        buffer_.insert(buffer_.end(), reinterpret_cast<const char*>(&v),
                       reinterpret_cast<const char*>(&v) + sizeof(T));
    }

    void string(const std::string& s) {
        pod(static_cast<std::uint64_t>(s.size()));
        buffer_.insert(buffer_.end(), s.begin(), s.end());
    }

    template <typename T>
    void vec(const std::vector<T>& v) {
        pod(static_cast<std::uint64_t>(v.size()));
        buffer_.insert(buffer_.end(), reinterpret_cast<const char*>(v.data()),
                       reinterpret_cast<const char*>(v.data()) + v.size() * sizeof(T));
    }

    void flush_section(std::uint32_t id) {
        std::uint32_t crc = static_cast<std::uint32_t>(
            crc32(0L, reinterpret_cast<const Bytef*>(buffer_.data()),
                  static_cast<uInt>(buffer_.size())));
        std::uint64_t len = buffer_.size();
        raw(&id, sizeof id);
        raw(&len, sizeof len);
        raw(&crc, sizeof crc);
        raw(buffer_.data(), buffer_.size());
        buffer_.clear();
    }

    void finish() {
        std::uint32_t id = kEnd;
        std::uint64_t len = 0;
        std::uint32_t crc = 0;
        raw(&id, sizeof id);
        raw(&len, sizeof len);
        raw(&crc, sizeof crc);
        if (!out_) throw SnapshotError("snapshot write failed");
    }

private:
    std::ofstream out_;
    std::vector<char> buffer_;
};

class Reader {
public:
    explicit Reader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw SnapshotError("cannot open snapshot file: " + path);
    }

    void raw(void* data, std::size_t n) {
        in_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw SnapshotError("snapshot truncated");
    }

    // reads one section into the buffer and verifies its checksum
    std::uint32_t next_section() {
        std::uint32_t id = 0, crc = 0;
        std::uint64_t len = 0;
        raw(&id, sizeof id);
        raw(&len, sizeof len);
        raw(&crc, sizeof crc);
        buffer_.resize(len);
        pos_ = 0;
        if (len) raw(buffer_.data(), len);
        std::uint32_t actual = static_cast<std::uint32_t>(
            crc32(0L, reinterpret_cast<const Bytef*>(buffer_.data()),
                  static_cast<uInt>(buffer_.size())));
        if (id != kEnd && actual != crc) throw SnapshotError("snapshot checksum mismatch");
        return id;
    }

    template <typename T>
    T pod() {
        if (pos_ + sizeof(T) > buffer_.size()) throw SnapshotError("snapshot section underrun");
        T v;
        std::memcpy(&v, buffer_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }

    std::string string() {
        auto n = pod<std::uint64_t>();
        if (pos_ + n > buffer_.size()) throw SnapshotError("snapshot section underrun");
        std::string s(buffer_.data() + pos_, n);
        pos_ += n;
        return s;
    }

    template <typename T>
    std::vector<T> vec() {
        auto n = pod<std::uint64_t>();
        if (pos_ + n * sizeof(T) > buffer_.size())
            throw SnapshotError("snapshot section underrun");
        std::vector<T> v(n);
        std::memcpy(v.data(), buffer_.data() + pos_, n * sizeof(T));
        pos_ += n * sizeof(T);
        return v;
    }

private:
    std::ifstream in_;
    std::vector<char> buffer_;
    std::size_t pos_ = 0;
};

} // namespace

void persist_snapshot(const ProjectedGraph& g, const std::string& path) {
    Writer w(path);

    std::uint32_t magic = kMagic, version = kVersion;
    w.raw(&magic, sizeof magic);
    w.raw(&version, sizeof version);

    w.pod(static_cast<std::uint8_t>(g.variant));
    w.string(g.description);
    w.pod(g.n_users);
    w.pod(g.n_prefs);
    w.pod(g.n_reps);
    w.flush_section(kHeader);

    w.pod(static_cast<std::uint64_t>(g.user_labels.size()));
    for (const auto& s : g.user_labels) w.string(s);
    w.flush_section(kUserLabels);

    w.pod(static_cast<std::uint64_t>(g.item_labels.size()));
    for (const auto& s : g.item_labels) w.string(s);
    w.flush_section(kItemLabels);

    for (const auto& p : g.prefs) {
        w.pod(p.winner);
        w.pod(p.loser);
    }
    w.flush_section(kPrefs);

    for (const auto& r : g.reps) {
        w.pod(r.item);
        w.pod(static_cast<std::uint8_t>(r.side));
    }
    w.flush_section(kReps);

    w.pod(g.adjacency.rows);
    w.pod(g.adjacency.cols);
    w.vec(g.adjacency.row_ptr);
    w.vec(g.adjacency.col);
    w.vec(g.adjacency.val);
    w.flush_section(kAdjacency);

    w.vec(g.dangling);
    w.flush_section(kDangling);

    w.finish();
}

ProjectedGraph load_snapshot(const std::string& path) {
    Reader r(path);

    std::uint32_t magic = 0, version = 0;
    r.raw(&magic, sizeof magic);
    r.raw(&version, sizeof version);
    if (magic != kMagic) throw SnapshotError("not a projected-graph snapshot: " + path);
    if (version != kVersion)
        throw SnapshotError("snapshot format version " + std::to_string(version) +
                            " is not supported (expected " + std::to_string(kVersion) + ")");

    ProjectedGraph g;
    std::size_t n_prefs = 0, n_reps = 0;

    for (;;) {
        std::uint32_t id = r.next_section();
        if (id == kEnd) break;
        switch (id) {
        case kHeader: {
            g.variant = static_cast<Variant>(r.pod<std::uint8_t>());
            g.description = r.string();
            g.n_users = r.pod<std::uint32_t>();
            g.n_prefs = r.pod<std::uint32_t>();
            g.n_reps = r.pod<std::uint32_t>();
            n_prefs = g.n_prefs;
            n_reps = g.n_reps;
            break;
        }
        case kUserLabels: {
            auto n = r.pod<std::uint64_t>();
            g.user_labels.clear();
            for (std::uint64_t i = 0; i < n; ++i) g.user_labels.push_back(r.string());
            break;
        }
        case kItemLabels: {
            auto n = r.pod<std::uint64_t>();
            g.item_labels.clear();
            for (std::uint64_t i = 0; i < n; ++i) g.item_labels.push_back(r.string());
            break;
        }
        case kPrefs:
            g.prefs.clear();
            for (std::size_t i = 0; i < n_prefs; ++i) {
                TripartitePreferenceGraph::Pref p{};
                p.winner = r.pod<NodeId>();
                p.loser = r.pod<NodeId>();
                g.prefs.push_back(p);
            }
            break;
        case kReps:
            g.reps.clear();
            for (std::size_t i = 0; i < n_reps; ++i) {
                TripartitePreferenceGraph::Rep rep{};
                rep.item = r.pod<NodeId>();
                rep.side = static_cast<Side>(r.pod<std::uint8_t>());
                g.reps.push_back(rep);
            }
            break;
        case kAdjacency:
            g.adjacency.rows = r.pod<std::uint32_t>();
            g.adjacency.cols = r.pod<std::uint32_t>();
            g.adjacency.row_ptr = r.vec<std::size_t>();
            g.adjacency.col = r.vec<std::uint32_t>();
            g.adjacency.val = r.vec<double>();
            break;
        case kDangling: g.dangling = r.vec<std::uint32_t>(); break;
        default: throw SnapshotError("unknown snapshot section " + std::to_string(id));
        }
    }

    if (g.adjacency.rows != g.size() || g.adjacency.row_ptr.size() != g.size() + 1u)
        throw SnapshotError("snapshot adjacency does not match its roster");

    for (std::uint32_t u = 0; u < g.n_users; ++u) g.user_row.emplace(g.user_labels[u], u);
    const std::uint32_t rep0 = g.rep_row_offset();
    for (std::uint32_t i = 0; i < g.n_reps; ++i) {
        const auto& rep = g.reps[i];
        auto [it, inserted] =
            g.item_rep_rows.try_emplace(g.item_labels[rep.item], std::make_pair(-1, -1));
        (rep.side == Side::desirable ? it->second.first : it->second.second) = rep0 + i;
    }
    return g;
}

} // namespace regrank
