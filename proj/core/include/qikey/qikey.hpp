#pragma once

#include "qikey/adversarial.hpp"
#include "qikey/analysis.hpp"
#include "qikey/bench.hpp"
#include "qikey/dataset.hpp"
#include "qikey/estimator.hpp"
#include "qikey/filter.hpp"
#include "qikey/minkey.hpp"
#include "qikey/rng.hpp"
#include "qikey/separation.hpp"
#include "qikey/sketch_io.hpp"
