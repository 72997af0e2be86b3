// Copyright (C) 2026 The hoikit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hoikit/error.hpp"
#include "hoikit/io_util.hpp"
#include "hoikit/taxonomy.hpp"

namespace hoikit {

enum class SplitSetting { kRfUc, kNfUc, kUnseenObject, kUnseenVerb, kFull };

inline std::string to_string(SplitSetting s) {
  switch (s) {
    case SplitSetting::kRfUc: return "RF-UC";
    case SplitSetting::kNfUc: return "NF-UC";
    case SplitSetting::kUnseenObject: return "UO";
    case SplitSetting::kUnseenVerb: return "UV";
    case SplitSetting::kFull: return "full";
  }
  return "full";
}

inline SplitSetting split_setting_from_string(const std::string& s) {
  if (s == "RF-UC") return SplitSetting::kRfUc;
  if (s == "NF-UC") return SplitSetting::kNfUc;
  if (s == "UO") return SplitSetting::kUnseenObject;
  if (s == "UV") return SplitSetting::kUnseenVerb;
  if (s == "full") return SplitSetting::kFull;
  throw ValidationError("unknown split setting \"" + s + "\" (expected RF-UC, NF-UC, UO, UV, or full)");
}

// Zero-shot evaluation split: which interactions (and, for UO/UV, which
// objects/verbs) are held out of training.
struct SplitSpec {
  SplitSetting setting = SplitSetting::kFull;
  std::set<int> unseen_interactions;
  std::set<int> unseen_objects;
  std::set<int> unseen_verbs;

  static SplitSpec full() { return SplitSpec{}; }

  bool is_unseen(int interaction_id) const {
    return unseen_interactions.count(interaction_id) > 0;
  }

  // UO implies every interaction of an unseen object is unseen; UV is the
  // analogue for verbs; unseen sets never reference ids outside the taxonomy.
  void validate(const Taxonomy& taxonomy) const {
    for (int id : unseen_interactions) taxonomy.interaction(id);
    for (int id : unseen_objects) taxonomy.object(id);
    for (int id : unseen_verbs) taxonomy.verb(id);
    for (const Interaction& in : taxonomy.interactions()) {
      if (unseen_objects.count(in.object_id) && !is_unseen(in.id)) {
        throw ValidationError("split inconsistency: interaction " + std::to_string(in.id) +
                              " has unseen object " + std::to_string(in.object_id) +
                              " but is not marked unseen");
      }
      if (unseen_verbs.count(in.verb_id) && !is_unseen(in.id)) {
        throw ValidationError("split inconsistency: interaction " + std::to_string(in.id) +
                              " has unseen verb " + std::to_string(in.verb_id) +
                              " but is not marked unseen");
      }
    }
  }

  static SplitSpec from_json(const json& j) {
    SplitSpec s;
    s.setting = split_setting_from_string(field_as<std::string>(j, "setting", "split"));
    for (const auto& v : require_field(j, "unseen_interaction_ids", "split")) {
      s.unseen_interactions.insert(v.get<int>());
    }
    for (const auto& v : require_field(j, "unseen_object_ids", "split")) {
      s.unseen_objects.insert(v.get<int>());
    }
    for (const auto& v : require_field(j, "unseen_verb_ids", "split")) {
      s.unseen_verbs.insert(v.get<int>());
    }
    return s;
  }

  static SplitSpec load(const std::filesystem::path& path) {
    return from_json(load_json_file(path));
  }

  json to_json() const {
    json j;
    j["setting"] = to_string(setting);
    j["unseen_interaction_ids"] = std::vector<int>(unseen_interactions.begin(), unseen_interactions.end());
    j["unseen_object_ids"] = std::vector<int>(unseen_objects.begin(), unseen_objects.end());
    j["unseen_verb_ids"] = std::vector<int>(unseen_verbs.begin(), unseen_verbs.end());
    return j;
  }

  void save(const std::filesystem::path& path) const { atomic_write_json(path, to_json()); }
};

// RF-UC / NF-UC: hold out `count` interactions with the lowest / highest
// training frequency, ties broken by ascending interaction id.
inline SplitSpec build_zero_shot_split(const Taxonomy& taxonomy, SplitSetting setting, int count) {
  if (setting != SplitSetting::kRfUc && setting != SplitSetting::kNfUc) {
    throw ValidationError("count-based split construction applies to RF-UC and NF-UC only");
  }
  const auto& interactions = taxonomy.interactions();
  if (count < 0 || count > static_cast<int>(interactions.size())) {
    throw ValidationError("hold-out count " + std::to_string(count) + " out of range (taxonomy has " +
                          std::to_string(interactions.size()) + " interactions)");
  }
  std::vector<int> order(interactions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  const bool rare_first = setting == SplitSetting::kRfUc;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const long ca = interactions[a].train_count;
    const long cb = interactions[b].train_count;
    if (ca != cb) return rare_first ? ca < cb : ca > cb;
    return a < b;
  });
  SplitSpec s;
  s.setting = setting;
  s.unseen_interactions.insert(order.begin(), order.begin() + count);
  return s;
}

// UO / UV: hold out every interaction involving the given objects / verbs.
inline SplitSpec build_zero_shot_split(const Taxonomy& taxonomy, SplitSetting setting,
                                       const std::set<int>& held_out_ids) {
  if (setting != SplitSetting::kUnseenObject && setting != SplitSetting::kUnseenVerb) {
    throw ValidationError("id-based split construction applies to UO and UV only");
  }
  SplitSpec s;
  s.setting = setting;
  if (setting == SplitSetting::kUnseenObject) {
    for (int id : held_out_ids) taxonomy.object(id);
    s.unseen_objects = held_out_ids;
    for (const Interaction& in : taxonomy.interactions()) {
      if (held_out_ids.count(in.object_id)) s.unseen_interactions.insert(in.id);
    }
  } else {
    for (int id : held_out_ids) taxonomy.verb(id);
    s.unseen_verbs = held_out_ids;
    for (const Interaction& in : taxonomy.interactions()) {
      if (held_out_ids.count(in.verb_id)) s.unseen_interactions.insert(in.id);
    }
  }
  return s;
}

// Candidate interactions of an object in taxonomy order. Training callers
// pass include_unseen=false so held-out combinations never appear in
// prompts; evaluation passes true to score the full zero-shot list.
inline std::vector<int> candidate_list(int object_id, const Taxonomy& taxonomy,
                                       const SplitSpec& split, bool include_unseen) {
  taxonomy.object(object_id);  // id check
  std::vector<int> out;
  for (int id : taxonomy.theta(object_id)) {
    if (include_unseen || !split.is_unseen(id)) out.push_back(id);
  }
  return out;
}

}  // namespace hoikit
