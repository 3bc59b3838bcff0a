#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the synthetic rasters and measurement files under data/.

Deterministic by construction; run from the repository root:
    python3 scripts/gen_fixtures.py
"""
import math
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data")

EARTH_R = 6371000.0


def hav(lat1, lon1, lat2, lon2):
    p1, p2 = math.radians(lat1), math.radians(lat2)
    sdp = math.sin(math.radians(lat2 - lat1) / 2.0)
    sdl = math.sin(math.radians(lon2 - lon1) / 2.0)
    h = sdp * sdp + math.cos(p1) * math.cos(p2) * sdl * sdl
    return 2.0 * EARTH_R * math.atan2(math.sqrt(h), math.sqrt(1.0 - h))


def fspl(freq_mhz, d_m):
    return 32.44 + 20.0 * math.log10(freq_mhz) + 20.0 * math.log10(d_m / 1000.0)


def write_grid(name, ncols, nrows, xll, yll, cell, values, nodata=-9999.0):
    path = os.path.join(OUT, "fixtures", name)
    with open(path, "w") as f:
        f.write(f"ncols {ncols}\n")
        f.write(f"nrows {nrows}\n")
        f.write(f"xllcorner {xll!r}\n")
        f.write(f"yllcorner {yll!r}\n")
        f.write(f"cellsize {cell!r}\n")
        f.write(f"NODATA_value {nodata:g}\n")
        for row in range(nrows):
            f.write(" ".join("%.6g" % values[row][col] for col in range(ncols)) + "\n")
    print("wrote", path)


def terrain_flat():
    n = 40
    vals = [[100.0] * n for _ in range(n)]
    write_grid("terrain_flat.asc", n, n, -75.016, 44.984, 0.0008, vals)


def terrain_hills():
    n = 40
    vals = []
    for row in range(n):
        r = []
        for col in range(n):
            v = 100.0 + 30.0 * math.sin(col / 5.0) * math.cos(row / 7.0)
            r.append(float("%.6g" % v))
        vals.append(r)
    write_grid("terrain_hills.asc", n, n, -75.016, 44.984, 0.0008, vals)


def terrain_holes():
    n = 8
    vals = [[float("%.6g" % (120.0 + 2.5 * ((r * 3 + c) % 11))) for c in range(n)] for r in range(n)]
    vals[2][3] = -9999.0
    vals[5][5] = -9999.0
    write_grid("terrain_holes.asc", n, n, -74.99, 45.01, 0.0008, vals)


def lc_extent():
    # Same extent as the terrain fixtures, finer cells.
    return dict(ncols=80, nrows=80, xll=-75.016, yll=44.984, cell=0.0004)


def landcover():
    e = lc_extent()

    def center(row, col):
        lon = e["xll"] + (col + 0.5) * e["cell"]
        lat = e["yll"] + (e["nrows"] - row - 0.5) * e["cell"]
        return lat, lon

    vals = []
    for row in range(e["nrows"]):
        r = []
        for col in range(e["ncols"]):
            lat, lon = center(row, col)
            code = 30.0
            if lat < 44.9855:
                code = 80.0  # lake along the south edge
            elif -75.008 <= lon <= -75.003 and 44.990 <= lat <= 44.996:
                code = 10.0  # main forest block
            elif -75.002 <= lon <= -74.999 and 44.991 <= lat <= 44.994:
                code = 50.0  # village
            elif -75.001 <= lon <= -74.999 and 45.004 <= lat <= 45.0065:
                code = 10.0  # trees crossing the measurement paths
            elif (row * 7 + col) % 53 == 0:
                code = 20.0  # scattered shrub
            r.append(code)
        vals.append(r)
    vals[10][3] = 95.0
    vals[11][3] = 95.0
    vals[40][70] = 100.0
    vals[4][4] = -9999.0
    vals[4][5] = -9999.0
    write_grid("landcover.asc", e["ncols"], e["nrows"], e["xll"], e["yll"], e["cell"], vals)


def hag():
    ncols = nrows = 60
    xll, yll, cell = -75.01, 44.988, 0.0002
    vals = []
    for row in range(nrows):
        r = []
        for col in range(ncols):
            lon = xll + (col + 0.5) * cell
            lat = yll + (nrows - row - 0.5) * cell
            v = 0.0
            if -75.008 <= lon <= -75.003 and 44.990 <= lat <= 44.996:
                v = 2.0 + ((row * 7 + col * 3) % 17) * 1.1  # canopy heights
            elif -75.002 <= lon <= -74.999 and 44.991 <= lat <= 44.994:
                v = 3.0 + ((row + col) % 9) * 0.9  # rooftops
            elif (row + col) % 41 == 0:
                v = 0.4  # hedgerow noise, below the usable floor
            r.append(float("%.6g" % v))
        vals.append(r)
    vals[12][12] = -9999.0
    vals[30][8] = -9999.0
    write_grid("hag.asc", ncols, nrows, xll, yll, cell, vals)


def clearance_margin(d, tx_h, rx_h, freq_mhz, spacing=30.0):
    """Worst diffraction parameter over the profile of a flat 100 m terrain
    link, same construction as the kernel. Must stay clear of the -0.78
    threshold for the measured losses to equal free-space exactly."""
    ae = 4.0 / 3.0 * EARTH_R
    lam = 299792458.0 / (freq_mhz * 1e6)
    segs = max(2, math.ceil(d / spacing * (1.0 - 1e-12)))
    h_ts, h_rs = 100.0 + tx_h, 100.0 + rx_h
    worst = -1e30
    for i in range(1, segs):
        di = d * i / segs
        hi = 100.0 + di * (d - di) / (2.0 * ae)
        chord = (h_ts * (d - di) + h_rs * di) / d
        nu = (hi - chord) * math.sqrt(2.0 * d / (lam * di * (d - di)))
        worst = max(worst, nu)
    return worst


def measurements():
    tx = (45.0, -75.0)
    rows = [
        ("ottawa_755", "low_rx", (45.0027, -75.0), 755.0, 5.0),
        ("ottawa_755", "low_rx", (45.0045, -75.0), 755.0, 5.0),
        ("ottawa_755", "low_rx", (45.0063, -74.998), 755.0, 5.0),
        ("ottawa_755", "low_rx", (45.008, -75.002), 755.0, 5.0),
        ("ottawa_3875", "high_rx", (45.0036, -75.004), 3875.0, 10.0),
        ("ottawa_3875", "high_rx", (45.0054, -74.996), 3875.0, 10.0),
        ("ottawa_3875", "high_rx", (45.0072, -75.0), 3875.0, 10.0),
        ("nb_3599", "low_rx", (45.0031, -74.997), 3599.0, 5.0),
        ("nb_3599", "low_rx", (45.0049, -75.003), 3599.0, 5.0),
        ("nb_3599", "low_rx", (45.0067, -74.999), 3599.0, 5.0),
    ]
    path = os.path.join(OUT, "fixtures", "measurements.csv")
    with open(path, "w") as f:
        f.write("dataset,group,tx_lat,tx_lon,tx_h_agl_m,rx_lat,rx_lon,rx_h_agl_m,freq_mhz,path_loss_db\n")
        for ds, grp, rx, freq, rx_h in rows:
            d = hav(tx[0], tx[1], rx[0], rx[1])
            nu = clearance_margin(d, 10.0, rx_h, freq)
            assert nu < -0.85, (ds, rx, nu)
            loss = fspl(freq, d)
            f.write(f"{ds},{grp},{tx[0]!r},{tx[1]!r},10,{rx[0]!r},{rx[1]!r},{rx_h!r},{freq:g},{loss:.6f}\n")
    print("wrote", path)


def manifest():
    path = os.path.join(OUT, "fixtures", "sweep.manifest")
    with open(path, "w") as f:
        f.write("heights=defaults,mean,p75\n")
        f.write("spacing=10,30,100\n")
    print("wrote", path)


def schemes():
    esa = """# ESA WorldCover v200 codes onto the four clutter categories.
name=esa-worldcover
policy=open
code.10=trees
code.20=open
code.30=open
code.40=open
code.50=suburban
code.60=open
code.70=open
code.80=open
code.90=open
code.95=trees
code.100=open
"""
    nrcan = """# NRCan 2015 land cover of Canada onto the four clutter categories.
name=nrcan-landcover
policy=open
code.1=trees
code.2=trees
code.5=trees
code.6=trees
code.8=open
code.10=open
code.11=open
code.12=open
code.13=open
code.14=open
code.15=open
code.16=open
code.17=suburban
code.18=open
code.19=open
"""
    osm = """# Rasterized OSM wood polygons: cell is wooded or it is not.
name=osm-wood
policy=error
code.0=open
code.1=trees
"""
    heights = """# Height overrides for tall boreal stands; mangrove cells stay low.
height.trees=18
height.code.95=3
"""
    for name, text in [("esa_worldcover.scheme", esa), ("nrcan_landcover.scheme", nrcan),
                       ("osm_wood.scheme", osm)]:
        path = os.path.join(OUT, "schemes", name)
        with open(path, "w") as f:
            f.write(text)
        print("wrote", path)
    path = os.path.join(OUT, "heights", "example.heights")
    with open(path, "w") as f:
        f.write(heights)
    print("wrote", path)


def main():
    for sub in ["fixtures", "schemes", "heights"]:
        os.makedirs(os.path.join(OUT, sub), exist_ok=True)
    terrain_flat()
    terrain_hills()
    terrain_holes()
    landcover()
    hag()
    measurements()
    manifest()
    schemes()


if __name__ == "__main__":
    main()
