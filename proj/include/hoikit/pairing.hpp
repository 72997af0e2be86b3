// Copyright (C) 2026 The hoikit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "hoikit/geometry.hpp"
#include "hoikit/split.hpp"
#include "hoikit/taxonomy.hpp"

namespace hoikit {

// A category-labeled scored box from any external detector.
struct Detection {
  BBox box;
  int category = -1;
  double score = 1.0;
};

struct GroundTruthTriplet {
  BBox human_box;
  BBox object_box;
  int object_id = -1;
  int verb_id = -1;
};

// An ordered human-object candidate. Labels are filled in by the assignment
// passes below; they stay empty for pure inference.
struct HOPair {
  int human_index = -1;   // index into the source detection list
  int object_index = -1;
  Detection human;
  Detection object;
  std::vector<int> candidates;          // interaction ids, taxonomy order
  std::optional<int> interactiveness_label;
  std::vector<int> interaction_labels;  // Y_v, aligned with candidates
};

// Exhaustive association: every human detection is paired with every other
// detection, including other humans. Order is (human index ascending,
// object index ascending), so pair lists are reproducible.
inline std::vector<HOPair> associate_pairs(const std::vector<Detection>& detections,
                                           const Taxonomy& taxonomy,
                                           const SplitSpec& split = SplitSpec::full(),
                                           bool include_unseen = true) {
  std::vector<HOPair> pairs;
  const int n = static_cast<int>(detections.size());
  for (int j = 0; j < n; ++j) {
    if (detections[j].category != taxonomy.human_object_id()) continue;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      HOPair p;
      p.human_index = j;
      p.object_index = k;
      p.human = detections[j];
      p.object = detections[k];
      p.candidates = candidate_list(detections[k].category, taxonomy, split, include_unseen);
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

// Conjunctive match rule shared by label assignment: both boxes must clear
// the IoU threshold and the object category must agree.
inline bool pair_matches_triplet(const HOPair& pair, const GroundTruthTriplet& gt,
                                 double iou_threshold) {
  return pair.object.category == gt.object_id &&
         iou(pair.human.box, gt.human_box) > iou_threshold &&
         iou(pair.object.box, gt.object_box) > iou_threshold;
}

// Interactiveness label: 1 iff some ground-truth triplet matches the pair.
// Labels are written into the pairs and also returned.
inline std::vector<int> assign_interactiveness_labels(std::vector<HOPair>& pairs,
                                                      const std::vector<GroundTruthTriplet>& gts,
                                                      double iou_threshold) {
  if (!(iou_threshold > 0.0) || !(iou_threshold < 1.0)) {
    throw ValidationError("iou_threshold must lie in (0, 1)");
  }
  std::vector<int> labels(pairs.size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const auto& gt : gts) {
      if (pair_matches_triplet(pairs[i], gt, iou_threshold)) {
        labels[i] = 1;
        break;
      }
    }
    pairs[i].interactiveness_label = labels[i];
  }
  return labels;
}

inline std::vector<GroundTruthTriplet> matched_triplets(const HOPair& pair,
                                                        const std::vector<GroundTruthTriplet>& gts,
                                                        double iou_threshold) {
  std::vector<GroundTruthTriplet> out;
  for (const auto& gt : gts) {
    if (pair_matches_triplet(pair, gt, iou_threshold)) out.push_back(gt);
  }
  return out;
}

// Y_v over the pair's candidate list: position k is positive iff candidate
// k's verb appears among the matched ground-truth verbs. A matched verb
// missing from the candidate list means the taxonomy and the annotations
// disagree, which is an error rather than a silent zero.
inline std::vector<int> assign_interaction_labels(HOPair& pair, const Taxonomy& taxonomy,
                                                  const std::vector<GroundTruthTriplet>& matched) {
  std::set<int> gt_verbs;
  for (const auto& gt : matched) {
    if (gt.object_id != pair.object.category) {
      throw ValidationError("matched triplet object category " + std::to_string(gt.object_id) +
                            " differs from pair object category " +
                            std::to_string(pair.object.category));
    }
    gt_verbs.insert(gt.verb_id);
  }
  std::vector<int> labels(pair.candidates.size(), 0);
  std::set<int> covered;
  for (std::size_t k = 0; k < pair.candidates.size(); ++k) {
    const int verb = taxonomy.interaction(pair.candidates[k]).verb_id;
    if (gt_verbs.count(verb)) {
      labels[k] = 1;
      covered.insert(verb);
    }
  }
  for (int verb : gt_verbs) {
    if (!covered.count(verb)) {
      throw ValidationError("ground-truth verb " + std::to_string(verb) +
                            " is not in the candidate list of object " +
                            std::to_string(pair.object.category));
    }
  }
  pair.interaction_labels = labels;
  return labels;
}

}  // namespace hoikit
