#pragma once

// Light-trail scheduling of transmission requests on an optical path network.
//
// Processors are 0..p along the path; link x joins processors x and x + 1.
// A request src -> dst uses links src..dst-1, so two requests overlap iff
// they share a link. Each color becomes a wavelength and each chromon a
// trail delimited by OFF shutters.

#include <string>
#include <string_view>
#include <vector>

#include "chromon/pig.hpp"
#include "chromon/verify.hpp"

namespace chromon {

struct TransmissionRequest {
    std::string id;
    int src = 0;
    int dst = 0;
    Weight bandwidth = 1;
};

// `id src dst bandwidth` lines ('#' comments). src and dst are swapped when
// given in decreasing order; src == dst is rejected.
std::vector<TransmissionRequest> parse_requests(std::string_view text);
std::string format_requests(const std::vector<TransmissionRequest>& reqs);

// Request i becomes interval [2 src, 2 dst - 1] weighted by its bandwidth.
// Throws WeightTooLargeError when a bandwidth exceeds capacity.
IntervalInstance requests_to_intervals(const std::vector<TransmissionRequest>& reqs, Weight capacity);

enum class ScheduleMode { unweighted, splittable, nonsplittable };

const char* to_string(ScheduleMode m);
// Throws std::invalid_argument on an unknown name.
ScheduleMode parse_mode(std::string_view name);

struct TrailShare {
    std::string request;
    Weight amount = 0;
};

struct Trail {
    int left = 0;   // processor
    int right = 0;  // processor
    std::vector<TrailShare> requests;
    Weight load = 0;
};

struct Wavelength {
    std::vector<Trail> trails;  // sorted by left
    std::vector<int> shutters;  // processors switched OFF, ascending
};

struct LightTrailPlan {
    ScheduleMode mode = ScheduleMode::unweighted;
    Weight capacity = 0;
    int processors = 0;  // highest processor index
    std::vector<Wavelength> wavelengths;
};

// Unweighted mode needs every bandwidth to be 1 (throws InfeasibleInputError
// otherwise). Throws NotProperError when one request's span properly
// contains another's.
LightTrailPlan schedule(const std::vector<TransmissionRequest>& reqs, Weight capacity, ScheduleMode mode);

// Largest total bandwidth over any single link.
Weight congestion(const std::vector<TransmissionRequest>& reqs);

// Trails link-disjoint per wavelength, spans equal to the union of their
// requests' spans, loads <= C and equal to the share sum, shutters exactly at
// trail ends, every request fully served (in one share unless splittable).
ValidationReport validate_plan(const LightTrailPlan& plan, const std::vector<TransmissionRequest>& reqs,
                               Weight capacity);

std::string plan_to_json(const LightTrailPlan& plan, int indent = 2);
// Throws ParseError on malformed JSON or missing fields.
LightTrailPlan plan_from_json(std::string_view text);

// One row per wavelength: 'X' for an OFF shutter, '.' for a processor in
// pass-through, '=' for a link carried by a trail.
std::string plan_diagram(const LightTrailPlan& plan);

}  // namespace chromon
