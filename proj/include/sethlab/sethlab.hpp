#pragma once

#include "sethlab/bench.hpp"
#include "sethlab/desk_profile.hpp"
#include "sethlab/edit_distance.hpp"
#include "sethlab/gadget_checks.hpp"
#include "sethlab/gadgets.hpp"
#include "sethlab/orthogonal_vectors.hpp"
#include "sethlab/parallel.hpp"
#include "sethlab/pattern_distance.hpp"
#include "sethlab/reduction.hpp"
#include "sethlab/report.hpp"
#include "sethlab/sequence.hpp"
#include "sethlab/verify.hpp"
