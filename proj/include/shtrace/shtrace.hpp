#pragma once

#include "shtrace/exactnum.hpp"
#include "shtrace/rootdata.hpp"
#include "shtrace/kottwitz.hpp"
#include "shtrace/weights.hpp"
#include "shtrace/stconj.hpp"
#include "shtrace/chardist.hpp"
