"""Writes data/gazetteer.tsv and data/boundaries.geojson.

Coordinates are rounded real values; boundary polygons are coarse
rectangles, enough for map bins and centroids.
"""
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parents[2]

# (name, alternates, lat, lon, class, cc, admin1, population)
COUNTRIES = [
    ("India", "Republic of India", 21.0, 78.0, "IN", 1380000000),
    ("United States", "USA;United States of America;America", 39.8, -98.6, "US", 331000000),
    ("United Kingdom", "UK;Britain;Great Britain", 54.0, -2.0, "GB", 67000000),
    ("France", "", 46.6, 2.2, "FR", 67000000),
    ("Australia", "", -25.3, 133.8, "AU", 25700000),
    ("Japan", "", 36.2, 138.3, "JP", 126000000),
    ("Pakistan", "", 30.4, 69.3, "PK", 220000000),
    ("China", "", 35.9, 104.2, "CN", 1400000000),
    ("Germany", "", 51.2, 10.4, "DE", 83000000),
    ("Italy", "", 42.8, 12.6, "IT", 60000000),
    ("Spain", "", 40.5, -3.7, "ES", 47000000),
    ("Portugal", "", 39.4, -8.2, "PT", 10300000),
    ("Netherlands", "Holland", 52.1, 5.3, "NL", 17400000),
    ("Switzerland", "", 46.8, 8.2, "CH", 8600000),
    ("Greece", "", 39.1, 21.8, "GR", 10700000),
    ("Russia", "Russian Federation", 61.5, 105.3, "RU", 146000000),
    ("Turkey", "", 39.0, 35.2, "TR", 84000000),
    ("Canada", "", 56.1, -106.3, "CA", 38000000),
    ("Mexico", "", 23.6, -102.6, "MX", 128000000),
    ("Brazil", "", -14.2, -51.9, "BR", 212000000),
    ("Argentina", "", -38.4, -63.6, "AR", 45000000),
    ("Peru", "", -9.2, -75.0, "PE", 33000000),
    ("Colombia", "", 4.6, -74.3, "CO", 51000000),
    ("Chile", "", -35.7, -71.5, "CL", 19000000),
    ("Egypt", "", 26.8, 30.8, "EG", 102000000),
    ("Kenya", "", -0.02, 37.9, "KE", 53000000),
    ("Nigeria", "", 9.1, 8.7, "NG", 206000000),
    ("South Africa", "", -30.6, 22.9, "ZA", 59000000),
    ("United Arab Emirates", "UAE", 23.4, 53.8, "AE", 9900000),
    ("Saudi Arabia", "", 23.9, 45.1, "SA", 34800000),
    ("Iran", "", 32.4, 53.7, "IR", 84000000),
    ("Afghanistan", "", 33.9, 67.7, "AF", 38900000),
    ("Sri Lanka", "", 7.9, 80.8, "LK", 21900000),
    ("Bangladesh", "", 23.7, 90.4, "BD", 165000000),
    ("Nepal", "", 28.4, 84.1, "NP", 29100000),
    ("Thailand", "", 15.9, 101.0, "TH", 70000000),
    ("Indonesia", "", -0.8, 113.9, "ID", 273000000),
    ("Philippines", "", 12.9, 121.8, "PH", 110000000),
    ("Vietnam", "Viet Nam", 14.1, 108.3, "VN", 97000000),
    ("New Zealand", "", -40.9, 174.9, "NZ", 5100000),
    ("Singapore", "", 1.35, 103.82, "SG", 5700000),
    ("Croatia", "", 45.1, 15.2, "HR", 4000000),
]

ADMIN1 = [
    ("Maharashtra", "", 19.5, 75.7, "IN", "MH", 112000000),
    ("Tamil Nadu", "", 11.1, 78.7, "IN", "TN", 72000000),
    ("Kerala", "", 10.3, 76.3, "IN", "KL", 35000000),
    ("Karnataka", "", 15.3, 75.7, "IN", "KA", 61000000),
    ("Delhi", "National Capital Territory", 28.6, 77.2, "IN", "DL", 19000000),
    ("West Bengal", "", 22.9, 87.9, "IN", "WB", 91000000),
    ("Gujarat", "", 22.3, 71.2, "IN", "GJ", 60000000),
    ("Telangana", "", 18.1, 79.0, "IN", "TG", 35000000),
    ("Texas", "", 31.0, -99.9, "US", "TX", 29000000),
    ("California", "", 36.8, -119.4, "US", "CA", 39500000),
    ("New York State", "", 43.0, -75.5, "US", "NY", 19500000),
    ("Florida", "", 27.7, -81.7, "US", "FL", 21500000),
    ("Illinois", "", 40.0, -89.2, "US", "IL", 12700000),
    ("Massachusetts", "", 42.4, -71.4, "US", "MA", 6900000),
    ("Alabama", "", 32.8, -86.8, "US", "AL", 4900000),
    ("England", "", 52.4, -1.2, "GB", "ENG", 56000000),
    ("Scotland", "", 56.5, -4.2, "GB", "SCT", 5400000),
    ("Ile-de-France", "Île-de-France", 48.7, 2.5, "FR", "IDF", 12200000),
    ("Provence", "", 43.9, 6.1, "FR", "PAC", 5000000),
    ("New South Wales", "NSW", -32.0, 147.0, "AU", "NSW", 8100000),
    ("Victoria", "", -36.9, 144.3, "AU", "VIC", 6600000),
    ("Sindh", "", 26.0, 68.8, "PK", "SD", 48000000),
    ("Punjab", "", 31.2, 72.7, "PK", "PB", 110000000),
    ("Ontario", "", 50.0, -85.0, "CA", "ON", 14700000),
    ("British Columbia", "", 53.7, -127.6, "CA", "BC", 5100000),
    ("Bavaria", "", 48.8, 11.5, "DE", "BY", 13100000),
    ("Lombardy", "", 45.6, 9.8, "IT", "LOM", 10000000),
    ("Catalonia", "", 41.6, 1.5, "ES", "CT", 7700000),
    ("Hubei", "", 30.9, 112.2, "CN", "HB", 58000000),
    ("Guangdong", "", 23.3, 113.4, "CN", "GD", 115000000),
]

CITIES = [
    ("Mumbai", "Bombay", 19.076, 72.878, "IN", "MH", 12400000),
    ("Pune", "Poona", 18.520, 73.857, "IN", "MH", 3100000),
    ("Nagpur", "", 21.146, 79.088, "IN", "MH", 2400000),
    ("Chennai", "Madras", 13.083, 80.270, "IN", "TN", 7100000),
    ("Coimbatore", "", 11.017, 76.956, "IN", "TN", 1600000),
    ("Madurai", "", 9.925, 78.120, "IN", "TN", 1500000),
    ("Tiruchirappalli", "Trichy", 10.790, 78.705, "IN", "TN", 900000),
    ("Kochi", "Cochin", 9.931, 76.267, "IN", "KL", 600000),
    ("Bengaluru", "Bangalore", 12.972, 77.595, "IN", "KA", 8400000),
    ("New Delhi", "", 28.614, 77.209, "IN", "DL", 250000),
    ("Kolkata", "Calcutta", 22.573, 88.364, "IN", "WB", 4500000),
    ("Ahmedabad", "", 23.023, 72.571, "IN", "GJ", 5600000),
    ("Hyderabad", "", 17.385, 78.487, "IN", "TG", 6800000),
    ("Hyderabad", "", 25.396, 68.377, "PK", "SD", 1700000),
    ("Karachi", "", 24.861, 67.010, "PK", "SD", 14900000),
    ("Lahore", "", 31.520, 74.359, "PK", "PB", 11100000),
    ("Islamabad", "", 33.684, 73.048, "PK", "IS", 1000000),
    ("Paris", "", 48.857, 2.352, "FR", "IDF", 2140000),
    ("Paris", "", 33.661, -95.556, "US", "TX", 25000),
    ("Lyon", "", 45.764, 4.836, "FR", "ARA", 516000),
    ("Marseille", "", 43.296, 5.370, "FR", "PAC", 861000),
    ("Nice", "", 43.710, 7.262, "FR", "PAC", 342000),
    ("Dallas", "", 32.777, -96.797, "US", "TX", 1340000),
    ("Houston", "", 29.760, -95.370, "US", "TX", 2300000),
    ("Austin", "", 30.267, -97.743, "US", "TX", 960000),
    ("New York", "NYC;New York City", 40.713, -74.006, "US", "NY", 8300000),
    ("Los Angeles", "", 34.052, -118.244, "US", "CA", 3900000),
    ("San Francisco", "", 37.775, -122.419, "US", "CA", 880000),
    ("Chicago", "", 41.878, -87.630, "US", "IL", 2700000),
    ("Boston", "", 42.360, -71.059, "US", "MA", 690000),
    ("Miami", "", 25.762, -80.192, "US", "FL", 470000),
    ("Orlando", "", 28.538, -81.379, "US", "FL", 290000),
    ("Mobile", "", 30.695, -88.040, "US", "AL", 190000),
    ("London", "", 51.507, -0.128, "GB", "ENG", 8900000),
    ("London", "", 42.984, -81.245, "CA", "ON", 400000),
    ("Manchester", "", 53.481, -2.243, "GB", "ENG", 550000),
    ("Reading", "", 51.454, -0.973, "GB", "ENG", 160000),
    ("Bath", "", 51.381, -2.359, "GB", "ENG", 90000),
    ("Edinburgh", "", 55.953, -3.188, "GB", "SCT", 490000),
    ("Sydney", "", -33.869, 151.209, "AU", "NSW", 5300000),
    ("Melbourne", "", -37.814, 144.963, "AU", "VIC", 5000000),
    ("Tokyo", "", 35.690, 139.692, "JP", "13", 13900000),
    ("Osaka", "", 34.694, 135.502, "JP", "27", 2700000),
    ("Beijing", "Peking", 39.904, 116.407, "CN", "BJ", 21500000),
    ("Shanghai", "", 31.230, 121.474, "CN", "SH", 24200000),
    ("Wuhan", "", 30.593, 114.305, "CN", "HB", 11000000),
    ("Guangzhou", "Canton", 23.129, 113.264, "CN", "GD", 15300000),
    ("Hong Kong", "", 22.320, 114.169, "HK", "", 7500000),
    ("Bangkok", "", 13.756, 100.502, "TH", "40", 8300000),
    ("Jakarta", "", -6.209, 106.846, "ID", "JK", 10600000),
    ("Manila", "", 14.600, 120.984, "PH", "NCR", 1800000),
    ("Dubai", "", 25.205, 55.271, "AE", "DU", 3300000),
    ("Riyadh", "", 24.713, 46.675, "SA", "RD", 7600000),
    ("Tehran", "", 35.689, 51.389, "IR", "TE", 8700000),
    ("Kabul", "", 34.555, 69.207, "AF", "KB", 4400000),
    ("Colombo", "", 6.927, 79.861, "LK", "WP", 750000),
    ("Dhaka", "", 23.810, 90.412, "BD", "DA", 8900000),
    ("Kathmandu", "", 27.717, 85.324, "NP", "BA", 1400000),
    ("Cairo", "", 30.044, 31.236, "EG", "C", 9500000),
    ("Nairobi", "", -1.292, 36.822, "KE", "NB", 4400000),
    ("Lagos", "", 6.524, 3.379, "NG", "LA", 14800000),
    ("Johannesburg", "", -26.204, 28.047, "ZA", "GT", 5600000),
    ("Moscow", "", 55.756, 37.617, "RU", "MOW", 12500000),
    ("Istanbul", "", 41.008, 28.978, "TR", "34", 15500000),
    ("Berlin", "", 52.520, 13.405, "DE", "BE", 3600000),
    ("Munich", "München", 48.135, 11.582, "DE", "BY", 1500000),
    ("Frankfurt", "", 50.110, 8.682, "DE", "HE", 750000),
    ("Hamburg", "", 53.551, 9.994, "DE", "HH", 1800000),
    ("Rome", "Roma", 41.903, 12.496, "IT", "LZ", 2800000),
    ("Milan", "Milano", 45.464, 9.190, "IT", "LOM", 1400000),
    ("Venice", "Venezia", 45.441, 12.316, "IT", "VEN", 260000),
    ("Madrid", "", 40.417, -3.704, "ES", "MD", 3300000),
    ("Barcelona", "", 41.385, 2.173, "ES", "CT", 1600000),
    ("Lisbon", "Lisboa", 38.722, -9.139, "PT", "LI", 505000),
    ("Amsterdam", "", 52.368, 4.904, "NL", "NH", 870000),
    ("Zurich", "Zürich", 47.377, 8.542, "CH", "ZH", 420000),
    ("Geneva", "Genève", 46.204, 6.143, "CH", "GE", 200000),
    ("Athens", "", 37.984, 23.728, "GR", "I", 660000),
    ("Split", "", 43.508, 16.440, "HR", "17", 180000),
    ("Toronto", "", 43.653, -79.383, "CA", "ON", 2900000),
    ("Vancouver", "", 49.283, -123.121, "CA", "BC", 680000),
    ("Mexico City", "", 19.433, -99.133, "MX", "CMX", 9200000),
    ("Sao Paulo", "São Paulo", -23.551, -46.633, "BR", "SP", 12300000),
    ("Rio de Janeiro", "Rio", -22.907, -43.173, "BR", "RJ", 6700000),
    ("Buenos Aires", "", -34.604, -58.382, "AR", "C", 3100000),
    ("Lima", "", -12.046, -77.043, "PE", "LIM", 9700000),
    ("Bogota", "Bogotá", 4.711, -74.072, "CO", "DC", 7400000),
    ("Santiago", "", -33.449, -70.669, "CL", "RM", 5600000),
    ("Auckland", "", -36.849, 174.763, "NZ", "AUK", 1600000),
    ("Singapore", "", 1.290, 103.852, "SG", "", 5700000),
]

# Rough bounding boxes (west, south, east, north).
COUNTRY_BOXES = {
    "IN": (68.1, 6.7, 97.4, 35.5), "US": (-124.8, 24.5, -66.9, 49.4), "GB": (-8.2, 49.9, 1.8, 58.7),
    "FR": (-4.8, 42.3, 8.2, 51.1), "AU": (113.3, -43.6, 153.6, -10.7), "JP": (129.4, 31.0, 145.5, 45.5),
    "PK": (60.9, 23.7, 77.8, 37.1), "CN": (73.5, 18.2, 134.8, 53.6), "DE": (5.9, 47.3, 15.0, 55.1),
    "IT": (6.6, 36.6, 18.5, 47.1), "ES": (-9.3, 36.0, 3.3, 43.8), "CA": (-141.0, 41.7, -52.6, 70.0),
    "BR": (-73.9, -33.7, -34.8, 5.3), "EG": (24.7, 22.0, 36.9, 31.7), "KE": (33.9, -4.7, 41.9, 5.0),
    "ZA": (16.5, -34.8, 32.9, -22.1), "AE": (51.6, 22.6, 56.4, 26.1), "NG": (2.7, 4.3, 14.7, 13.9),
}
ADMIN_BOXES = {
    ("IN", "MH"): (72.6, 15.6, 80.9, 22.0), ("IN", "TN"): (76.2, 8.1, 80.4, 13.6),
    ("IN", "KL"): (74.9, 8.2, 77.4, 12.8), ("IN", "KA"): (74.0, 11.6, 78.6, 18.5),
    ("IN", "DL"): (76.8, 28.4, 77.4, 28.9), ("IN", "WB"): (85.8, 21.5, 89.9, 27.2),
    ("IN", "GJ"): (68.2, 20.1, 74.5, 24.7), ("IN", "TG"): (77.2, 15.8, 81.3, 19.9),
    ("US", "TX"): (-106.6, 25.8, -93.5, 36.5), ("US", "CA"): (-124.4, 32.5, -114.1, 42.0),
    ("US", "NY"): (-79.8, 40.5, -71.9, 45.0), ("US", "FL"): (-87.6, 24.5, -80.0, 31.0),
    ("GB", "ENG"): (-5.7, 49.9, 1.8, 55.8), ("GB", "SCT"): (-7.6, 54.6, -0.7, 58.7),
    ("FR", "IDF"): (1.4, 48.1, 3.6, 49.2), ("AU", "NSW"): (141.0, -37.5, 153.6, -28.2),
    ("PK", "SD"): (66.7, 23.7, 71.1, 28.5), ("PK", "PB"): (69.3, 27.7, 75.4, 34.0),
}


def box(w, s, e, n):
    return [[[w, s], [e, s], [e, n], [w, n], [w, s]]]


def main():
    rows = ["place_id\tname\talternate_names\tlat\tlon\tfeature_class\tcountry_code\tadmin1_code\tpopulation"]
    pid = 1000
    for name, alt, lat, lon, cc, pop in COUNTRIES:
        pid += 1
        rows.append(f"{pid}\t{name}\t{alt}\t{lat}\t{lon}\tA\t{cc}\t\t{pop}")
    pid = 2000
    for name, alt, lat, lon, cc, a1, pop in ADMIN1:
        pid += 1
        rows.append(f"{pid}\t{name}\t{alt}\t{lat}\t{lon}\tA\t{cc}\t{a1}\t{pop}")
    pid = 3000
    for name, alt, lat, lon, cc, a1, pop in CITIES:
        pid += 1
        rows.append(f"{pid}\t{name}\t{alt}\t{lat}\t{lon}\tP\t{cc}\t{a1}\t{pop}")
    (ROOT / "data" / "gazetteer.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")

    features = []
    for cc, b in sorted(COUNTRY_BOXES.items()):
        features.append({"type": "Feature", "properties": {"country_code": cc},
                         "geometry": {"type": "Polygon", "coordinates": box(*b)}})
    for (cc, a1), b in sorted(ADMIN_BOXES.items()):
        features.append({"type": "Feature", "properties": {"country_code": cc, "admin1_code": a1},
                         "geometry": {"type": "Polygon", "coordinates": box(*b)}})
    doc = {"type": "FeatureCollection", "features": features}
    (ROOT / "data" / "boundaries.geojson").write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
