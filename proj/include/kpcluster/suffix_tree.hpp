#ifndef KPCLUSTER_SUFFIX_TREE_HPP
#define KPCLUSTER_SUFFIX_TREE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpcluster/text_pipeline.hpp"

namespace kpcluster {

// Word reserved as the per-sequence terminator; input sequences must not
// contain it.
inline constexpr std::string_view kSentinelToken = "$";

// Leaf marker (k, l): suffix of sequence k starting at word position l, both
// 1-based.
struct LeafRef {
    int unit = 0;
    int position = 0;
};

// Generalized suffix tree over word tokens. Edges are labelled with word
// spans, every internal node other than the root has at least two children,
// and every node carries the set of sequences whose suffixes pass through it.
// Built once, then immutable; queries are const and thread-safe.
class GeneralizedSuffixTree {
  public:
    struct Node {
        // Edge label: ids seqs_[label_unit][label_begin..label_end). The root
        // has label_unit == -1 and an empty label.
        int label_unit = -1;
        int label_begin = 0;
        int label_end = 0;
        const Node* parent = nullptr;
        std::map<int32_t, std::unique_ptr<Node>> children;  // first word id -> child
        std::vector<LeafRef> leaf_refs;
        std::set<int> units;  // 1-based sequence indices

        bool is_leaf() const { return children.empty(); }
        bool is_root() const { return label_unit < 0; }
    };

    // Inserts every word-level suffix of every sequence, each terminated by a
    // sentinel unique to its sequence, so the tree has exactly sum(m_k)
    // leaves. Throws std::invalid_argument on an empty input list ("no
    // sequences"), an empty sequence, or a sequence containing the reserved
    // sentinel token ("reserved token").
    static GeneralizedSuffixTree build(const std::vector<TokenSequence>& sequences);

    const Node& root() const { return *root_; }
    int n_units() const { return static_cast<int>(seqs_.size()); }

    // Path label from the root to `node`, sentinel tokens excluded.
    std::vector<std::string> phrase_of(const Node& node) const;

    // |units(node)| = number of distinct sequences containing the node's
    // phrase as a contiguous word subsequence.
    static int unit_count(const Node& node) {
        return static_cast<int>(node.units.size());
    }

    struct InternalNode {
        const Node* node;
        std::vector<std::string> phrase;
        const std::set<int>* units;
    };
    // Every non-root internal node, in deterministic depth-first order.
    std::vector<InternalNode> internal_nodes() const;

    // Every distinct contiguous word phrase of length 1..max_len occurring in
    // the inserted sequences, with the number of distinct sequences containing
    // it. Covers implicit (mid-edge) positions, so this is a superset of the
    // internal-node phrases.
    struct PhraseInfo {
        std::vector<std::string> words;
        int unit_count;
    };
    std::vector<PhraseInfo> phrases_up_to(int max_len) const;

    int leaf_count() const;

    // Indented debug dump, one node per line: `label=<words> units={..}`,
    // leaves additionally carry `leaf=(k,l)`.
    std::string dump() const;

  private:
    GeneralizedSuffixTree() = default;

    const std::string& word(int32_t id) const;
    void insert_suffix(int seq, int start);

    std::vector<std::vector<int32_t>> seqs_;  // word ids; sentinel -(k+1) appended
    std::vector<std::string> words_;          // id -> surface form
    std::unordered_map<std::string, int32_t> word_ids_;
    std::unique_ptr<Node> root_;
};

}  // namespace kpcluster

#endif  // KPCLUSTER_SUFFIX_TREE_HPP
