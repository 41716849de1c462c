#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hydro/common.hpp"
#include "hydro/series.hpp"

#include <json.hpp>

namespace hydro {

/// Water account for the remaining part of the operational year. Unit-agnostic;
/// the caller supplies all three quantities in one consistent volume unit.
struct ReservoirAccount {
    double available_storage = 0.0;
    double total_inflow_remaining = 0.0;
    double total_indent_remaining = 0.0;
};

struct ReservoirFactor {
    double factor = 0.0;
    bool effective = false;  // releases are scaled only when factor <= 1
};

/**
 * Factor by which indents are reduced before releases:
 *
 *   factor = (available storage + inflow remaining) / indent remaining
 *
 * Homogeneous of degree 0 in its inputs; effective only at 1 or below.
 */
inline ReservoirFactor reservoir_factor(const ReservoirAccount& account) {
    if (!(account.total_indent_remaining > 0.0)) {
        throw DataError("reservoir_factor: total indent must be > 0");
    }
    ReservoirFactor out;
    out.factor = (account.available_storage + account.total_inflow_remaining) /
                 account.total_indent_remaining;
    out.effective = out.factor <= 1.0;
    return out;
}

/// Literal storage-to-indent quotient. Dimensionally this is a ratio of
/// volumes, not a volume per day; see storage_release_per_day for the
/// per-day figure.
inline double daily_release_from_storage(double available_storage,
                                         double total_indent_remaining) {
    if (!(total_indent_remaining > 0.0)) {
        throw DataError("daily_release_from_storage: total indent must be > 0");
    }
    if (available_storage < 0.0) {
        throw std::invalid_argument("daily_release_from_storage: negative storage");
    }
    return available_storage / total_indent_remaining;
}

/// Companion helper: available storage spread over the remaining days.
inline double storage_release_per_day(double available_storage, double remaining_days) {
    if (!(remaining_days > 0.0)) {
        throw std::invalid_argument("storage_release_per_day: remaining days must be > 0");
    }
    if (available_storage < 0.0) {
        throw std::invalid_argument("storage_release_per_day: negative storage");
    }
    return available_storage / remaining_days;
}

/// Total daily release = release from storage + forecast inflow.
inline double total_daily_release(double release_from_storage, double predicted_inflow) {
    if (!(release_from_storage >= 0.0) || !(predicted_inflow >= 0.0)) {
        throw std::invalid_argument("total_daily_release: inputs must be finite and >= 0");
    }
    return release_from_storage + predicted_inflow;
}

// ---------------------------------------------------------------------------
// Rule curve
// ---------------------------------------------------------------------------

enum class RuleRelation {
    not_exceed_on_or_before,  // elevation must not exceed the limit on or before the date
    not_exceed_before,        // elevation must not exceed the limit before the date
    not_reach_before,         // elevation must not reach the limit before the date
    cap,                      // elevation must never exceed the limit
};

inline std::string to_string(RuleRelation r) {
    switch (r) {
        case RuleRelation::not_exceed_on_or_before: return "not_exceed_on_or_before";
        case RuleRelation::not_exceed_before: return "not_exceed_before";
        case RuleRelation::not_reach_before: return "not_reach_before";
        default: return "cap";
    }
}

inline RuleRelation rule_relation_from_string(const std::string& s) {
    if (s == "not_exceed_on_or_before") return RuleRelation::not_exceed_on_or_before;
    if (s == "not_exceed_before") return RuleRelation::not_exceed_before;
    if (s == "not_reach_before") return RuleRelation::not_reach_before;
    if (s == "cap") return RuleRelation::cap;
    throw DataError("unknown rule relation '" + s + "'");
}

/// One calendar-indexed elevation constraint; month/day are ignored for caps.
struct RuleConstraint {
    unsigned month = 0;
    unsigned day = 0;
    double elevation_ft = 0.0;
    RuleRelation relation = RuleRelation::cap;

    std::string describe() const {
        char elevation[32];
        std::snprintf(elevation, sizeof(elevation), "%g", elevation_ft);
        char date[8] = "";
        if (relation != RuleRelation::cap) {
            std::snprintf(date, sizeof(date), "%02u-%02u", month, day);
        }
        switch (relation) {
            case RuleRelation::not_exceed_on_or_before:
                return std::string("must not exceed ") + elevation + " ft on or before " + date;
            case RuleRelation::not_exceed_before:
                return std::string("must not exceed ") + elevation + " ft before " + date;
            case RuleRelation::not_reach_before:
                return std::string("must not reach ") + elevation + " ft before " + date;
            default:
                return std::string("must never exceed ") + elevation + " ft";
        }
    }
};

/**
 * Calendar-indexed elevation limits. Dated constraints apply only within
 * the filling season (from season start, May 21 by default, up to each
 * constraint's date): outside of it the reservoir is drawing down and the
 * rise limits are moot. The cap applies year-round.
 */
struct RuleCurve {
    unsigned season_start_month = 5;
    unsigned season_start_day = 21;
    std::vector<RuleConstraint> constraints;

    /// Filling-season curve used by default: 1650 ft through Jul 31, 1670 ft
    /// not before Aug 15, 1680 ft not before Aug 31, and a hard 1680 ft cap.
    static RuleCurve defaults() {
        RuleCurve curve;
        curve.constraints = {
            {7, 31, 1650.0, RuleRelation::not_exceed_on_or_before},
            {8, 15, 1670.0, RuleRelation::not_exceed_before},
            {8, 31, 1680.0, RuleRelation::not_reach_before},
            {0, 0, 1680.0, RuleRelation::cap},
        };
        return curve;
    }

    void validate() const {
        double prev = -1.0;
        for (const auto& c : constraints) {
            if (c.relation == RuleRelation::cap) continue;
            if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31) {
                throw DataError("rule curve: invalid month/day");
            }
            if (!(c.elevation_ft > prev)) {
                throw DataError("rule curve: dated elevations must be strictly increasing");
            }
            prev = c.elevation_ft;
        }
    }
};

/// All constraints the (date, elevation) pair violates, in curve order.
inline std::vector<RuleConstraint> check_rule_curve(Date date, double elevation_ft,
                                                    const RuleCurve& curve) {
    if (!std::isfinite(elevation_ft)) {
        throw std::invalid_argument("check_rule_curve: non-finite elevation");
    }
    const std::chrono::year_month_day ymd{date};
    const unsigned month = unsigned(ymd.month());
    const unsigned day = unsigned(ymd.day());
    const bool in_season =
        month > curve.season_start_month ||
        (month == curve.season_start_month && day >= curve.season_start_day);
    const auto before = [&](const RuleConstraint& c) {
        return in_season && (month < c.month || (month == c.month && day < c.day));
    };
    const auto on_or_before = [&](const RuleConstraint& c) {
        return in_season && (month < c.month || (month == c.month && day <= c.day));
    };

    std::vector<RuleConstraint> violated;
    for (const auto& c : curve.constraints) {
        bool hit = false;
        switch (c.relation) {
            case RuleRelation::not_exceed_on_or_before:
                hit = on_or_before(c) && elevation_ft > c.elevation_ft;
                break;
            case RuleRelation::not_exceed_before:
                hit = before(c) && elevation_ft > c.elevation_ft;
                break;
            case RuleRelation::not_reach_before:
                hit = before(c) && elevation_ft >= c.elevation_ft;
                break;
            case RuleRelation::cap:
                hit = elevation_ft > c.elevation_ft;
                break;
        }
        if (hit) violated.push_back(c);
    }
    return violated;
}

inline void to_json(nlohmann::json& j, const RuleConstraint& c) {
    j = nlohmann::json{{"month", c.month},
                       {"day", c.day},
                       {"elevation_ft", c.elevation_ft},
                       {"relation", to_string(c.relation)}};
}

inline void from_json(const nlohmann::json& j, RuleConstraint& c) {
    c.month = j.value("month", 0u);
    c.day = j.value("day", 0u);
    j.at("elevation_ft").get_to(c.elevation_ft);
    c.relation = rule_relation_from_string(j.at("relation").get<std::string>());
}

inline void to_json(nlohmann::json& j, const RuleCurve& curve) {
    j = nlohmann::json{{"season_start_month", curve.season_start_month},
                       {"season_start_day", curve.season_start_day},
                       {"constraints", curve.constraints}};
}

inline void from_json(const nlohmann::json& j, RuleCurve& curve) {
    curve.season_start_month = j.value("season_start_month", 5u);
    curve.season_start_day = j.value("season_start_day", 21u);
    j.at("constraints").get_to(curve.constraints);
    curve.validate();
}

}  // namespace hydro
