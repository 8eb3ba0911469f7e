#pragma once

#include "rankstab/bifiltration_io.hpp"
#include "rankstab/bottleneck.hpp"
#include "rankstab/complex.hpp"
#include "rankstab/errors.hpp"
#include "rankstab/grade.hpp"
#include "rankstab/line.hpp"
#include "rankstab/matching.hpp"
#include "rankstab/persistence.hpp"
#include "rankstab/serialize.hpp"
#include "rankstab/stability.hpp"
