#pragma once

#include "brauer/bigint.hpp"
#include "brauer/charform.hpp"
#include "brauer/detect.hpp"
#include "brauer/error.hpp"
#include "brauer/factor.hpp"
#include "brauer/linalg.hpp"
#include "brauer/matrix_io.hpp"
#include "brauer/multipoly.hpp"
#include "brauer/report_json.hpp"
#include "brauer/resolvent.hpp"
#include "brauer/resultant.hpp"
#include "brauer/scan.hpp"
#include "brauer/selfcheck.hpp"
#include "brauer/unipoly.hpp"
