#pragma once

#include "antialg/graded.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antialg {

enum class AlgebraKind { antialgebra, superalgebra };

std::string to_string(AlgebraKind k);

// Index window for family algebras: labels whose index lies in [min, max].
struct Window {
    Rational min;
    Rational max;

    static Window symmetric(const Rational& n) { return {-n, n}; }
    bool contains(const Rational& i) const { return min <= i && i <= max; }
    std::string str() const;
    friend bool operator==(const Window&, const Window&) = default;
};

// Z2-graded algebra given either by a finite structure-constant table or by a
// computable structure function on an infinite index family.  Products are
// always evaluated exactly; the window only limits which basis elements are
// enumerated by even_basis()/odd_basis().
class AlgebraTable {
public:
    using Key = std::pair<Label, Label>;
    using Table = std::map<Key, GradedVector>;
    using ProductRule = std::function<GradedVector(const Label&, const Label&)>;
    using ParityRule = std::function<std::optional<int>(const Label&)>;
    using BasisRule = std::function<std::vector<Label>(int parity, const Window&)>;

    AlgebraTable() = default;

    // Finite table.  `table` holds the products as given; with `complete_by_symmetry`
    // the companion orientation implied by SkewP (antialgebra) or by
    // super-antisymmetry (superalgebra) is generated for every entry that is missing.
    static AlgebraTable finite(std::string name, AlgebraKind kind, std::vector<Label> even,
                               std::vector<Label> odd, Table table, bool complete_by_symmetry = true);

    static AlgebraTable family(std::string name, AlgebraKind kind, ParityRule parity, BasisRule basis,
                               ProductRule rule, Window window, std::string rule_name);

    const std::string& name() const { return name_; }
    AlgebraKind kind() const { return kind_; }
    bool is_family() const { return family_; }
    const std::optional<Window>& window() const { return window_; }
    const std::string& rule_name() const { return rule_name_; }

    std::vector<Label> even_basis() const;
    std::vector<Label> odd_basis() const;
    std::vector<Label> basis() const;  // even then odd
    std::size_t dim_even() const { return even_basis().size(); }
    std::size_t dim_odd() const { return odd_basis().size(); }

    bool contains(const Label& l) const;
    int parity(const Label& l) const;  // throws std::out_of_range on unknown labels
    ParityClass parity_of(const GradedVector& v) const;

    GradedVector product(const Label& a, const Label& b) const;
    GradedVector product(const GradedVector& u, const GradedVector& v) const;

    // Finite algebras only: every stored nonzero product.
    const Table& table() const;

    AlgebraTable with_window(const Window& w) const;
    AlgebraTable renamed(std::string name) const;
    // Overrides a single orientation of one product (no companion is generated).
    AlgebraTable with_product(const Label& a, const Label& b, const GradedVector& value) const;
    // Same basis, new product.  Finite algebras tabulate `rule` on all basis pairs.
    AlgebraTable with_rule(ProductRule rule, std::string name) const;

private:
    std::string name_;
    AlgebraKind kind_ = AlgebraKind::antialgebra;
    bool family_ = false;
    std::vector<Label> even_, odd_;
    std::map<Label, int> parity_map_;
    std::shared_ptr<const Table> table_;
    ProductRule rule_;
    ParityRule parity_rule_;
    BasisRule basis_rule_;
    std::optional<Window> window_;
    std::string rule_name_;
    std::map<Key, GradedVector> overrides_;
};

}  // namespace antialg
