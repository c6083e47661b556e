#include "aao/ising/types.hpp"

#include "aao/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aao {

std::string to_fraction_string(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) out << '/' << denominator(value);
    return out.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

} // namespace aao

namespace aao::ising {

void require_spin(int value, const char* what) {
    if (value != 1 && value != -1) {
        raise(ErrorCode::invalid_argument,
              std::string(what) + ": spin value must be +1 or -1, got " + std::to_string(value));
    }
}

namespace {

void sort_and_check_sites(std::vector<std::pair<SiteId, int>>& items, const char* what,
                          bool allow_duplicates_with_same_value) {
    for (const auto& [site, value] : items) require_spin(value, what);
    std::sort(items.begin(), items.end());
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].first != items[i - 1].first) continue;
        if (allow_duplicates_with_same_value && items[i].second == items[i - 1].second) continue;
        const auto code = allow_duplicates_with_same_value ? ErrorCode::inconsistent_evidence
                                                           : ErrorCode::invalid_argument;
        raise(code, std::string(what) + ": contradictory values for site " +
                        std::to_string(items[i].first));
    }
    items.erase(std::unique(items.begin(), items.end()), items.end());
}

} // namespace

Configuration::Configuration(std::vector<std::pair<SiteId, int>> assignment)
    : items_(std::move(assignment)) {
    sort_and_check_sites(items_, "configuration", false);
}

Configuration::Configuration(std::initializer_list<std::pair<SiteId, int>> assignment)
    : Configuration(std::vector<std::pair<SiteId, int>>(assignment)) {}

int Configuration::spin(SiteId site) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), site,
                               [](const auto& item, SiteId s) { return item.first < s; });
    if (it == items_.end() || it->first != site) {
        raise(ErrorCode::unknown_site,
              "configuration does not assign site " + std::to_string(site));
    }
    return it->second;
}

bool Configuration::contains(SiteId site) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), site,
                               [](const auto& item, SiteId s) { return item.first < s; });
    return it != items_.end() && it->first == site;
}

Evidence::Evidence(std::vector<std::pair<SiteId, int>> clamps) : clamps_(std::move(clamps)) {
    sort_and_check_sites(clamps_, "evidence", true);
}

Evidence::Evidence(std::initializer_list<std::pair<SiteId, int>> clamps)
    : Evidence(std::vector<std::pair<SiteId, int>>(clamps)) {}

void Evidence::insert(SiteId site, int value) {
    require_spin(value, "evidence");
    auto it = std::lower_bound(clamps_.begin(), clamps_.end(), site,
                               [](const auto& item, SiteId s) { return item.first < s; });
    if (it != clamps_.end() && it->first == site) {
        if (it->second != value) {
            raise(ErrorCode::inconsistent_evidence,
                  "contradictory clamp for site " + std::to_string(site) + ": have " +
                      std::to_string(it->second) + ", got " + std::to_string(value));
        }
        return;
    }
    clamps_.insert(it, {site, value});
}

Evidence Evidence::with(SiteId site, int value) const {
    Evidence out = *this;
    out.insert(site, value);
    return out;
}

Evidence Evidence::merged(const Evidence& other) const {
    Evidence out = *this;
    for (const auto& [site, value] : other.clamps_) out.insert(site, value);
    return out;
}

bool Evidence::contains(SiteId site) const { return value(site).has_value(); }

std::optional<int> Evidence::value(SiteId site) const {
    auto it = std::lower_bound(clamps_.begin(), clamps_.end(), site,
                               [](const auto& item, SiteId s) { return item.first < s; });
    if (it == clamps_.end() || it->first != site) return std::nullopt;
    return it->second;
}

InverseTemperature::InverseTemperature(double beta) : beta_(beta) {
    if (!std::isfinite(beta) || beta < 0.0) {
        raise(ErrorCode::invalid_argument,
              "inverse temperature must be a finite nonnegative real");
    }
}

} // namespace aao::ising
