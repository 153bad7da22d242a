#pragma once

/// Umbrella header.

#include "modpascal/bfile.hpp"
#include "modpascal/continuant.hpp"
#include "modpascal/mat2.hpp"
#include "modpascal/nat.hpp"
#include "modpascal/regular.hpp"
#include "modpascal/report.hpp"
#include "modpascal/stern.hpp"
#include "modpascal/triangle.hpp"
#include "modpascal/verify.hpp"
