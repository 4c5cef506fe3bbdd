#include "kpcluster/suffix_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kpcluster {

namespace {

bool is_sentinel(int32_t id) { return id < 0; }

}  // namespace

const std::string& GeneralizedSuffixTree::word(int32_t id) const {
    return words_[static_cast<std::size_t>(id)];
}

GeneralizedSuffixTree GeneralizedSuffixTree::build(
    const std::vector<TokenSequence>& sequences) {
    if (sequences.empty()) throw std::invalid_argument("no sequences");

    GeneralizedSuffixTree tree;
    tree.seqs_.reserve(sequences.size());
    for (std::size_t k = 0; k < sequences.size(); ++k) {
        const TokenSequence& seq = sequences[k];
        if (seq.tokens.empty()) {
            throw std::invalid_argument("empty sequence at index " +
                                        std::to_string(k));
        }
        std::vector<int32_t> ids;
        ids.reserve(seq.tokens.size() + 1);
        for (const std::string& token : seq.tokens) {
            if (token == kSentinelToken) throw std::invalid_argument("reserved token");
            auto [it, inserted] = tree.word_ids_.try_emplace(
                token, static_cast<int32_t>(tree.words_.size()));
            if (inserted) tree.words_.push_back(token);
            ids.push_back(it->second);
        }
        ids.push_back(-static_cast<int32_t>(k + 1));  // unique per-sequence sentinel
        tree.seqs_.push_back(std::move(ids));
    }

    tree.root_ = std::make_unique<Node>();
    for (std::size_t k = 0; k < tree.seqs_.size(); ++k) {
        const int m = static_cast<int>(tree.seqs_[k].size()) - 1;
        for (int start = 0; start < m; ++start) {
            tree.insert_suffix(static_cast<int>(k), start);
        }
    }
    return tree;
}

void GeneralizedSuffixTree::insert_suffix(int seq, int start) {
    const std::vector<int32_t>& s = seqs_[static_cast<std::size_t>(seq)];
    const int len = static_cast<int>(s.size());
    const int unit = seq + 1;

    Node* node = root_.get();
    int i = start;
    for (;;) {
        node->units.insert(unit);
        auto it = node->children.find(s[static_cast<std::size_t>(i)]);
        if (it == node->children.end()) {
            auto leaf = std::make_unique<Node>();
            leaf->label_unit = seq;
            leaf->label_begin = i;
            leaf->label_end = len;
            leaf->parent = node;
            leaf->units.insert(unit);
            leaf->leaf_refs.push_back(LeafRef{unit, start + 1});
            node->children.emplace(s[static_cast<std::size_t>(i)], std::move(leaf));
            return;
        }

        Node* child = it->second.get();
        const std::vector<int32_t>& label_seq =
            seqs_[static_cast<std::size_t>(child->label_unit)];
        int j = child->label_begin;
        while (j < child->label_end && i < len &&
               label_seq[static_cast<std::size_t>(j)] ==
                   s[static_cast<std::size_t>(i)]) {
            ++j;
            ++i;
        }
        if (j == child->label_end) {
            // Whole edge matched; the per-sequence sentinel guarantees the
            // suffix is not exhausted yet.
            node = child;
            continue;
        }

        // Mismatch inside the edge: split at j and hang a new leaf.
        auto mid = std::make_unique<Node>();
        mid->label_unit = child->label_unit;
        mid->label_begin = child->label_begin;
        mid->label_end = j;
        mid->parent = node;
        mid->units = child->units;
        mid->units.insert(unit);

        child->label_begin = j;
        child->parent = mid.get();

        auto leaf = std::make_unique<Node>();
        leaf->label_unit = seq;
        leaf->label_begin = i;
        leaf->label_end = len;
        leaf->parent = mid.get();
        leaf->units.insert(unit);
        leaf->leaf_refs.push_back(LeafRef{unit, start + 1});

        const int32_t edge_key = label_seq[static_cast<std::size_t>(mid->label_begin)];
        std::unique_ptr<Node> old_child = std::move(it->second);
        node->children.erase(it);
        mid->children.emplace(label_seq[static_cast<std::size_t>(j)],
                              std::move(old_child));
        mid->children.emplace(s[static_cast<std::size_t>(i)], std::move(leaf));
        node->children.emplace(edge_key, std::move(mid));
        return;
    }
}

std::vector<std::string> GeneralizedSuffixTree::phrase_of(const Node& node) const {
    std::vector<const Node*> path;
    for (const Node* cur = &node; cur != nullptr && !cur->is_root();
         cur = cur->parent) {
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    std::vector<std::string> phrase;
    for (const Node* cur : path) {
        const std::vector<int32_t>& s = seqs_[static_cast<std::size_t>(cur->label_unit)];
        for (int j = cur->label_begin; j < cur->label_end; ++j) {
            const int32_t id = s[static_cast<std::size_t>(j)];
            if (is_sentinel(id)) break;
            phrase.push_back(word(id));
        }
    }
    return phrase;
}

std::vector<GeneralizedSuffixTree::InternalNode>
GeneralizedSuffixTree::internal_nodes() const {
    std::vector<InternalNode> out;
    std::vector<std::string> phrase;

    auto visit = [&](auto&& self, const Node& node) -> void {
        const std::size_t depth_before = phrase.size();
        if (!node.is_root()) {
            const std::vector<int32_t>& s =
                seqs_[static_cast<std::size_t>(node.label_unit)];
            for (int j = node.label_begin; j < node.label_end; ++j) {
                const int32_t id = s[static_cast<std::size_t>(j)];
                if (is_sentinel(id)) break;
                phrase.push_back(word(id));
            }
            if (!node.is_leaf()) {
                out.push_back(InternalNode{&node, phrase, &node.units});
            }
        }
        for (const auto& [first, child] : node.children) self(self, *child);
        phrase.resize(depth_before);
    };
    visit(visit, *root_);
    return out;
}

std::vector<GeneralizedSuffixTree::PhraseInfo>
GeneralizedSuffixTree::phrases_up_to(int max_len) const {
    std::vector<PhraseInfo> out;
    std::vector<std::string> phrase;

    auto visit = [&](auto&& self, const Node& node) -> void {
        const std::size_t depth_before = phrase.size();
        bool truncated = false;
        if (!node.is_root()) {
            const std::vector<int32_t>& s =
                seqs_[static_cast<std::size_t>(node.label_unit)];
            for (int j = node.label_begin; j < node.label_end; ++j) {
                const int32_t id = s[static_cast<std::size_t>(j)];
                if (is_sentinel(id)) break;
                phrase.push_back(word(id));
                out.push_back(
                    PhraseInfo{phrase, static_cast<int>(node.units.size())});
                if (static_cast<int>(phrase.size()) == max_len) {
                    truncated = true;
                    break;
                }
            }
        }
        if (!truncated) {
            for (const auto& [first, child] : node.children) self(self, *child);
        }
        phrase.resize(depth_before);
    };
    visit(visit, *root_);
    return out;
}

int GeneralizedSuffixTree::leaf_count() const {
    auto visit = [&](auto&& self, const Node& node) -> int {
        if (node.is_leaf()) return 1;
        int total = 0;
        for (const auto& [first, child] : node.children) total += self(self, *child);
        return total;
    };
    return visit(visit, *root_);
}

std::string GeneralizedSuffixTree::dump() const {
    std::ostringstream out;
    auto write_units = [&](const std::set<int>& units) {
        out << "units={";
        bool first = true;
        for (int u : units) {
            if (!first) out << ",";
            out << u;
            first = false;
        }
        out << "}";
    };
    auto visit = [&](auto&& self, const Node& node, int depth) -> void {
        for (int d = 0; d < depth; ++d) out << "  ";
        if (node.is_root()) {
            out << "root ";
            write_units(node.units);
        } else {
            out << "label=";
            const std::vector<int32_t>& s =
                seqs_[static_cast<std::size_t>(node.label_unit)];
            for (int j = node.label_begin; j < node.label_end; ++j) {
                if (j > node.label_begin) out << " ";
                const int32_t id = s[static_cast<std::size_t>(j)];
                out << (is_sentinel(id) ? std::string(kSentinelToken) : word(id));
            }
            out << " ";
            write_units(node.units);
            for (const LeafRef& ref : node.leaf_refs) {
                out << " leaf=(" << ref.unit << "," << ref.position << ")";
            }
        }
        out << "\n";
        for (const auto& [first, child] : node.children) {
            self(self, *child, depth + 1);
        }
    };
    visit(visit, *root_, 0);
    return out.str();
}

}  // namespace kpcluster
