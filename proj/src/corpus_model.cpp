#include "isnad/corpus_model.hpp"

#include "isnad/errors.hpp"

namespace isnad {

int era_of_generation(int generation) {
    if (generation < kMinGeneration || generation > kMaxGeneration) {
        throw DomainError("generation " + std::to_string(generation) + " is outside 0..12");
    }
    if (generation == 0) return 1;
    if (generation <= 6) return 2;
    if (generation <= 9) return 3;
    return 4;
}

std::optional<int> Narrator::era() const {
    if (!generation) return std::nullopt;
    return era_of_generation(*generation);
}

void NarratorTable::insert(Narrator narrator) {
    if (narrator.id.empty()) {
        throw ValidationError("narrator id must be non-empty");
    }
    if (narrator.generation) {
        // range check; throws DomainError naming the value
        era_of_generation(*narrator.generation);
    }
    auto [it, inserted] = entries_.try_emplace(narrator.id, narrator);
    if (!inserted) {
        throw ValidationError("duplicate narrator id '" + narrator.id + "'");
    }
}

const Narrator* NarratorTable::find(std::string_view id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

const Narrator& NarratorTable::at(std::string_view id) const {
    if (const auto* n = find(id)) return *n;
    throw LookupError("unknown narrator id '" + std::string(id) + "'");
}

std::string HadithRecord::key() const {
    return collection + "/" + book + "/" + number;
}

}  // namespace isnad
