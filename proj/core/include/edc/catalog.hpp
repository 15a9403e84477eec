#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edc/expansion.hpp"
#include "edc/rng.hpp"

namespace edc {

struct prop_id {
    int part = 1;
    int number = 1;
    int variant = 1;

    friend bool operator==(const prop_id&, const prop_id&) = default;
};

std::string to_string(const prop_id& id);
// Accepts "P1.15", "P2.18", "P1.15.2"; nullopt on malformed input.
std::optional<prop_id> parse_prop_id(const std::string& text);

// Concrete inputs for one proposition run. Scalars are lengths the adapter
// lays on a private work axis; angles are radians, turned into sectors
// where a construction needs one.
struct instance {
    std::vector<std::pair<std::string, point>> points;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<std::pair<std::string, int>> ints;
    std::vector<std::pair<std::string, branch>> branches;

    point pt(const std::string& name) const;
    double scalar(const std::string& name) const;
    int integer(const std::string& name) const;
    branch br(const std::string& name, branch fallback = branch::left) const;
    double scale() const;
};

struct outputs {
    std::vector<std::pair<std::string, point>> points;
    std::vector<std::pair<std::string, double>> scalars;

    point pt(const std::string& name) const;
    double scalar(const std::string& name) const;
};

struct run_result {
    outputs out;
    program prog; // the fully expanded compass program
    step_metrics metrics;
};

// Relative error between produced and expected outputs:
// |got - expected| / max(1, |expected|, input scale), maximised over
// components. Predicate-style oracles compute the same metric from the
// defining relation instead of a closed-form value.
struct check_result {
    double rel_error = 0.0;
    std::string detail;
};

enum class param_kind { pt, scalar, integer, br };

// What an entry's expand function hands back: named point refs and named
// lengths (as spans inside the expansion's program).
struct expand_outputs {
    std::vector<std::pair<std::string, ref>> points;
    std::vector<std::pair<std::string, span>> lengths;
};

using expand_fn = std::function<expand_outputs(
    expansion&, const std::map<std::string, ref>& point_args, const instance& aux, int variant)>;

struct entry {
    int part = 1;
    int number = 1;
    std::string title;
    int variants = 1;
    bool supported = true;
    std::string unsupported_reason;
    std::vector<std::pair<int, std::string>> unsupported_variants;
    bool reconstructed = false; // construction reconstructed, not in the source text

    std::vector<std::pair<std::string, param_kind>> params;
    std::function<instance(rng&)> sample;
    expand_fn expand;
    std::function<check_result(const instance&, const outputs&)> check;

    std::string id_text() const;
    std::string signature() const;
};

const std::vector<entry>& catalog();
const entry& find_entry(int part, int number);

// Expands and executes the proposition on concrete inputs. Throws
// errc::unsupported for the registered gaps (P1.29 variant 4, P2.23, P2.24).
run_result run_proposition(const prop_id& id, const instance& in);

tolerance tolerance_for(const instance& in);

// Step counts of the canonical expansion (the corpus instance).
step_metrics canonical_metrics(const entry& en, int variant = 1);

// Deterministic demonstration inputs used for the shipped corpus files.
instance canonical_instance(const entry& en);

namespace detail {
void register_part1(std::vector<entry>& out);
void register_part2(std::vector<entry>& out);
} // namespace detail

} // namespace edc
