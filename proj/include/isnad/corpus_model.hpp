#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isnad {

inline constexpr int kMinGeneration = 0;
inline constexpr int kMaxGeneration = 12;
inline constexpr int kEraCount = 4;

/// Maps a lifespan generation (0..12) to its transmission era (1..4):
/// companions (0), successors (1-6), their students (7-9), and the
/// generation after them (10-12). Throws DomainError outside 0..12.
int era_of_generation(int generation);

struct Narrator {
    std::string id;
    std::string name;
    std::optional<int> generation;  // empty when the source row had no generation
    std::string city;

    std::optional<int> era() const;

    bool operator==(const Narrator&) const = default;
};

/// Narrators keyed by id. Ids are non-empty and unique; generations are range-checked on insert.
class NarratorTable {
public:
    using Map = std::map<std::string, Narrator, std::less<>>;

    void insert(Narrator narrator);

    const Narrator* find(std::string_view id) const;
    const Narrator& at(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Map::const_iterator begin() const noexcept { return entries_.begin(); }
    Map::const_iterator end() const noexcept { return entries_.end(); }

private:
    Map entries_;
};

/// Narrator ids ordered source-first: the earliest transmitter leads, the compiler-side narrator trails.
struct Chain {
    std::vector<std::string> narrators;

    bool operator==(const Chain&) const = default;
};

struct HadithRecord {
    std::string collection;
    std::string book;
    std::string number;
    std::vector<Chain> chains;

    /// "collection/book/number"; unique per corpus.
    std::string key() const;

    bool operator==(const HadithRecord&) const = default;
};

}  // namespace isnad
