#pragma once

#include "cpoker/cards.hpp"
#include "cpoker/detection.hpp"
#include "cpoker/divider.hpp"
#include "cpoker/errors.hpp"
#include "cpoker/hand_eval.hpp"
#include "cpoker/json_io.hpp"
#include "cpoker/pipeline.hpp"
#include "cpoker/rng.hpp"
#include "cpoker/scoring.hpp"
#include "cpoker/simulate.hpp"
#include "cpoker/transform.hpp"
