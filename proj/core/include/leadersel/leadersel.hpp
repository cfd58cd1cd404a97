#pragma once

#include "leadersel/errors.hpp"
#include "leadersel/experiments.hpp"
#include "leadersel/graph_model.hpp"
#include "leadersel/hop_paths.hpp"
#include "leadersel/metrics.hpp"
#include "leadersel/selectors.hpp"
#include "leadersel/tridiag.hpp"
