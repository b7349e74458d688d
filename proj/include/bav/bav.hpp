#pragma once

#include "bav/billiard.hpp"
#include "bav/error.hpp"
#include "bav/families.hpp"
#include "bav/fields.hpp"
#include "bav/flags.hpp"
#include "bav/generate.hpp"
#include "bav/grid.hpp"
#include "bav/json_io.hpp"
#include "bav/labelling.hpp"
#include "bav/linalg.hpp"
#include "bav/modules.hpp"
#include "bav/rng.hpp"
