#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eqeffort/error.hpp"

namespace eqeffort {

/// Attribute roles for one audit problem: a binary protected attribute, an
/// ordinal treatment, a binary outcome and a set of discrete covariates.
struct Schema {
    std::string protected_attr;
    std::string protected_pos;  // label mapped to s+
    std::string protected_neg;  // label mapped to s-
    std::string treatment_attr;
    std::vector<int> treatment_levels;  // strictly increasing
    std::string outcome_attr;
    std::string outcome_pos;  // label mapped to y=1
    std::vector<std::string> covariates;
    std::vector<std::string> match_attrs;  // subset of covariates

    void validate() const {
        if (protected_attr.empty() || treatment_attr.empty() || outcome_attr.empty())
            fail(ErrorKind::Schema, "protected, treatment and outcome attributes are required");
        if (protected_pos == protected_neg)
            fail(ErrorKind::Schema, "protected_pos and protected_neg must differ");
        if (treatment_levels.size() < 2)
            fail(ErrorKind::Schema, "treatment needs at least two levels");
        for (std::size_t i = 1; i < treatment_levels.size(); ++i)
            if (treatment_levels[i] <= treatment_levels[i - 1])
                fail(ErrorKind::Schema, "treatment_levels must be strictly increasing");
        std::set<std::string> roles{protected_attr, treatment_attr, outcome_attr};
        if (roles.size() != 3)
            fail(ErrorKind::Schema, "attribute roles must be pairwise disjoint");
        for (const auto& c : covariates) {
            if (roles.count(c))
                fail(ErrorKind::Schema, "covariate '" + c + "' collides with another role");
        }
        std::set<std::string> covs(covariates.begin(), covariates.end());
        if (covs.size() != covariates.size())
            fail(ErrorKind::Schema, "duplicate covariate name");
        for (const auto& m : match_attrs)
            if (!covs.count(m))
                fail(ErrorKind::Schema, "match attribute '" + m + "' is not a covariate");
    }

    int level_index(int level) const {
        auto it = std::find(treatment_levels.begin(), treatment_levels.end(), level);
        if (it == treatment_levels.end())
            fail(ErrorKind::Schema, "unknown treatment level " + std::to_string(level));
        return static_cast<int>(it - treatment_levels.begin());
    }

    int covariate_index(const std::string& name) const {
        auto it = std::find(covariates.begin(), covariates.end(), name);
        if (it == covariates.end())
            fail(ErrorKind::Schema, "unknown covariate '" + name + "'");
        return static_cast<int>(it - covariates.begin());
    }

    std::size_t n_levels() const { return treatment_levels.size(); }
};

/// How raw CSV strings become integer codes for one attribute.
struct AttrCodec {
    enum class Kind { Passthrough, Map, Threshold, SetMembership };

    Kind kind = Kind::Passthrough;
    std::map<std::string, int> categories;  // Map
    double threshold = 0.0;                 // Threshold
    bool ge = false;                        // Threshold: >= instead of >
    std::set<std::string> positive;         // SetMembership

    int encode(const std::string& raw, const std::string& attr, std::size_t row) const {
        switch (kind) {
            case Kind::Passthrough: {
                try {
                    std::size_t pos = 0;
                    int v = std::stoi(raw, &pos);
                    if (pos != raw.size()) throw std::invalid_argument(raw);
                    return v;
                } catch (const std::exception&) {
                    fail(ErrorKind::Mapping, "attribute '" + attr + "' row " + std::to_string(row) +
                                                 ": '" + raw + "' is not an integer code");
                }
            }
            case Kind::Map: {
                auto it = categories.find(raw);
                if (it == categories.end())
                    fail(ErrorKind::Mapping, "attribute '" + attr + "' row " + std::to_string(row) +
                                                 ": unmapped category '" + raw + "'");
                return it->second;
            }
            case Kind::Threshold: {
                try {
                    std::size_t pos = 0;
                    double v = std::stod(raw, &pos);
                    if (pos != raw.size()) throw std::invalid_argument(raw);
                    return (ge ? v >= threshold : v > threshold) ? 1 : 0;
                } catch (const std::exception&) {
                    fail(ErrorKind::Mapping, "attribute '" + attr + "' row " + std::to_string(row) +
                                                 ": '" + raw + "' is not numeric");
                }
            }
            case Kind::SetMembership:
                return positive.count(raw) ? 1 : 0;
        }
        fail(ErrorKind::Mapping, "bad codec");
    }
};

using ValueMaps = std::map<std::string, AttrCodec>;

}  // namespace eqeffort
