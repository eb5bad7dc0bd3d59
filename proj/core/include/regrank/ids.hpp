#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace regrank {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidId = static_cast<NodeId>(-1);

// Dense ids assigned in first-seen order, with the id<->label map kept around
// so results can always be reported in terms of the original identifiers.
class IdMap {
public:
    NodeId intern(const std::string& label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels_.size());
        labels_.push_back(label);
        index_.emplace(labels_.back(), id);
        return id;
    }

    NodeId find(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? kInvalidId : it->second;
    }

    bool contains(const std::string& label) const { return find(label) != kInvalidId; }
    const std::string& label(NodeId id) const { return labels_[id]; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const IdMap& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

// Orders identifiers numerically when both sides parse as non-negative
// integers, lexicographically otherwise. Used for deterministic tie-breaks.
bool label_less(const std::string& a, const std::string& b);

} // namespace regrank
