#pragma once

// Pass/fail records produced by the axiom checkers. A failed required item
// carries a witness (typically the basis indices where the identity broke).

#include <string>
#include <vector>

namespace hopflab {

struct CheckItem {
    std::string id;         // stable machine id, e.g. "algebra.assoc"
    std::string statement;  // human-readable statement of the law
    bool pass = false;
    bool informational = false;  // recorded but not counted by ok()
    std::string witness;         // nonempty on failure
};

class CheckReport {
public:
    void add(std::string id, std::string statement, bool pass,
             std::string witness = "", bool informational = false) {
        items_.push_back({std::move(id), std::move(statement), pass,
                          informational, std::move(witness)});
    }

    const std::vector<CheckItem>& items() const { return items_; }

    bool ok() const {
        for (const auto& it : items_)
            if (!it.informational && !it.pass) return false;
        return true;
    }

    const CheckItem* find(const std::string& id) const {
        for (const auto& it : items_)
            if (it.id == id) return &it;
        return nullptr;
    }

    void merge(const CheckReport& o) {
        items_.insert(items_.end(), o.items_.begin(), o.items_.end());
    }

    std::string first_failure() const {
        for (const auto& it : items_)
            if (!it.informational && !it.pass)
                return it.id + (it.witness.empty() ? "" : " at " + it.witness);
        return "";
    }

private:
    std::vector<CheckItem> items_;
};

}  // namespace hopflab
