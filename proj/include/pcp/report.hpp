#pragma once

#include <string>
#include <vector>

namespace pcp {

// Outcome of a verification suite: one entry per relation, with a witness
// (the offending element or pair, in canonical text form) on failure.
struct RelationReport {
    struct Entry {
        std::string label;
        bool pass = false;
        std::string witness;  // empty on pass
    };

    std::string suite;
    std::vector<Entry> relations;

    void add(std::string label, bool pass, std::string witness = "") {
        relations.push_back(Entry{std::move(label), pass, pass ? "" : std::move(witness)});
    }

    bool all_pass() const {
        for (const auto& e : relations)
            if (!e.pass) return false;
        return true;
    }

    // Deterministic merge, entries keyed by stable labels.
    void merge(const RelationReport& other) {
        relations.insert(relations.end(), other.relations.begin(), other.relations.end());
    }
};

}  // namespace pcp
