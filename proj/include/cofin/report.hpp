#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cofin {

struct CheckItem {
    std::string id;
    bool pass = false;
    std::string detail;  // counterexample / evidence on failure, may be empty
};

struct Report {
    std::string suite;
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(std::string id, bool pass, std::string detail = "") {
        items.push_back({std::move(id), pass, std::move(detail)});
    }
};

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : r.items) {
        nlohmann::json j{{"item", it.id}, {"status", it.pass ? "pass" : "fail"}};
        if (!it.pass && !it.detail.empty()) j["counterexample"] = it.detail;
        items.push_back(std::move(j));
    }
    return nlohmann::json{{"suite", r.suite}, {"items", items}, {"pass", r.all_pass()}};
}

}  // namespace cofin
