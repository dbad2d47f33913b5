#pragma once

#include <compare>
#include <string>
#include <vector>

namespace kneserlab {

/// Semantic identity of a vertex: a plain index, an ordered pair (product
/// graphs), a function table (exponential graphs), or a sorted subset
/// (Kneser graphs). Pairs recurse, so labels of iterated products stay
/// faithful to the construction.
class VertexLabel {
public:
    enum class Kind { index, pair, function_table, subset };

    static VertexLabel index(int i) {
        VertexLabel l(Kind::index);
        l.values_.push_back(i);
        return l;
    }
    static VertexLabel pair(VertexLabel left, VertexLabel right) {
        VertexLabel l(Kind::pair);
        l.children_.push_back(std::move(left));
        l.children_.push_back(std::move(right));
        return l;
    }
    /// values[v] in {1..c}, indexed by the vertices of the base graph.
    static VertexLabel function_table(std::vector<int> values) {
        VertexLabel l(Kind::function_table);
        l.values_ = std::move(values);
        return l;
    }
    /// elements strictly increasing, drawn from {1..m}.
    static VertexLabel subset(std::vector<int> elements) {
        VertexLabel l(Kind::subset);
        l.values_ = std::move(elements);
        return l;
    }

    Kind kind() const { return kind_; }
    const std::vector<int>& values() const { return values_; }
    const VertexLabel& left() const { return children_[0]; }
    const VertexLabel& right() const { return children_[1]; }

    bool operator==(const VertexLabel& o) const {
        return kind_ == o.kind_ && values_ == o.values_ && children_ == o.children_;
    }

    std::string to_string() const {
        switch (kind_) {
        case Kind::index:
            return std::to_string(values_[0]);
        case Kind::pair:
            return "(" + children_[0].to_string() + "," + children_[1].to_string() + ")";
        case Kind::function_table: {
            std::string s = "f[";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(values_[i]);
            }
            return s + "]";
        }
        case Kind::subset: {
            std::string s = "{";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(values_[i]);
            }
            return s + "}";
        }
        }
        return "?";
    }

private:
    explicit VertexLabel(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<int> values_;
    std::vector<VertexLabel> children_;
};

} // namespace kneserlab
