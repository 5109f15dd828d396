#include "symcoh/virtmod.hpp"

namespace symcoh {

void VirtualModule::add(const Weight& mu, long long mult) {
    if (mult == 0) return;
    auto it = entries_.find(mu);
    if (it == entries_.end()) {
        entries_.emplace(mu, mult);
    } else {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

long long VirtualModule::multiplicity(const Weight& mu) const {
    auto it = entries_.find(mu);
    return it == entries_.end() ? 0 : it->second;
}

VirtualModule& VirtualModule::operator+=(const VirtualModule& o) {
    for (const auto& [w, m] : o.entries_) add(w, m);
    return *this;
}

VirtualModule& VirtualModule::operator-=(const VirtualModule& o) {
    for (const auto& [w, m] : o.entries_) add(w, -m);
    return *this;
}

bool VirtualModule::leq(const VirtualModule& a, const VirtualModule& b) {
    for (const auto& [w, m] : a.entries_)
        if (m > b.multiplicity(w)) return false;
    for (const auto& [w, m] : b.entries_)
        if (a.multiplicity(w) > m) return false;
    return true;
}

void CohomologyTable::add(int degree, const Weight& mu, long long mult) {
    if (mult == 0) return;
    VirtualModule& vm = table_[degree];
    vm.add(mu, mult);
    if (vm.empty()) table_.erase(degree);
}

const VirtualModule* CohomologyTable::degree(int d) const {
    auto it = table_.find(d);
    return it == table_.end() ? nullptr : &it->second;
}

std::set<int> CohomologyTable::support() const {
    std::set<int> s;
    for (const auto& [d, vm] : table_)
        if (!vm.empty()) s.insert(d);
    return s;
}

VirtualModule CohomologyTable::alternating_sum() const {
    VirtualModule acc;
    for (const auto& [d, vm] : table_) {
        const long long sign = (d % 2 == 0) ? 1 : -1;
        for (const auto& [w, m] : vm.entries()) acc.add(w, sign * m);
    }
    return acc;
}

bool CohomologyTable::leq(const CohomologyTable& a, const CohomologyTable& b) {
    static const VirtualModule kEmpty;
    std::set<int> degrees = a.support();
    for (int d : b.support()) degrees.insert(d);
    for (int d : degrees) {
        const VirtualModule* va = a.degree(d);
        const VirtualModule* vb = b.degree(d);
        if (!VirtualModule::leq(va ? *va : kEmpty, vb ? *vb : kEmpty)) return false;
    }
    return true;
}

}  // namespace symcoh
