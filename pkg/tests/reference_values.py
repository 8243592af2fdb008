"""Printed reference rows, kept as strings so the number of decimals is known."""

TABLE_1 = [
    ('7', '1', '1', '0.4602', '-0.9010-0.4339i', '0.6235+0.7818i', '-0.2225+0.9749i', '1.1235'),
    ('13', '-5', '1', '0.7790', '-0.4822-0.8761i', '0.3953+0.9185i', '-0.8132+0.5820i', '0.7132'),
    ('19', '7', '1', '0.2129', '-0.9528-0.3037i', '0.9838-0.1791i', '0.3780+0.9258i', '0.7061'),
    ('31', '4', '2', '0.4011', '-0.8023-0.5969i', '0.9923+0.1235i', '-0.0963+0.9954i', '0.5274'),
    ('37', '-11', '1', '0.9001', '-0.0604-0.9982i', '0.4630+0.8863i', '-0.9452+0.3265i', '0.4127'),
    ('43', '-8', '2', '0.7423', '-0.3124-0.9499i', '0.7272+0.6864i', '-0.7742+0.6330i', '0.3792'),
    ('61', '1', '3', '0.5022', '-0.6466-0.7628i', '0.9759+0.2181i', '-0.3560+0.9345i', '0.3564'),
    ('67', '-5', '3', '0.6271', '-0.4569-0.8895i', '0.8964+0.4433i', '-0.5999+0.8001i', '0.3170'),
    ('73', '7', '3', '0.3829', '-0.7843-0.6204i', '0.9988-0.0481i', '-0.1114+0.9938i', '0.3409'),
    ('79', '-17', '1', '0.9483', '0.1286-0.9917i', '0.4824+0.8759i', '-0.9765+0.2154i', '0.3066'),
    ('97', '19', '1', '0.0890', '-0.9875-0.1576i', '0.7708-0.6371i', '0.4823+0.8760i', '0.3137'),
    ('103', '13', '3', '0.2919', '-0.8668-0.4986i', '0.9629-0.2697i', '0.0653+0.9979i', '0.2937'),
    ('109', '-2', '4', '0.5556', '-0.5387-0.8425i', '0.9666+0.2561i', '-0.4841+0.8750i', '0.2562'),
    ('127', '-20', '2', '0.8875', '0.0580-0.9983i', '0.6211+0.7837i', '-0.9411+0.3382i', '0.2464'),
    ('139', '-23', '1', '0.9731', '0.2257-0.9742i', '0.4899+0.8718i', '-0.9873+0.1588i', '0.2387'),
    ('151', '19', '3', '0.2290', '-0.9138-0.4062i', '0.9066-0.4219i', '0.1770+0.9842i', '0.2452'),
    ('157', '-14', '4', '0.7212', '-0.2380-0.9713i', '0.8495+0.5276i', '-0.7655+0.6434i', '0.2146'),
    ('163', '25', '1', '0.0683', '-0.9922-0.1248i', '0.7153-0.6988i', '0.4898+0.8718i', '0.2411'),
    ('181', '7', '5', '0.4359', '-0.6932-0.7207i', '0.9996-0.0270i', '-0.2649+0.9643i', '0.2092'),
]

TABLE_2 = [
    ('7', '1', '1', '0.4602', '0.8173+0.5762i', '-0.3890+0.9212i', '0.2804-0.9599i', '0.7129'),
    ('13', '-5', '1', '0.7790', '0.2469+0.9690i', '-0.7728+0.6346i', '0.6315-0.7754i', '0.9242'),
    ('19', '7', '1', '0.2129', '0.9520+0.3061i', '-0.4274+0.9041i', '0.0041-1.0000i', '0.4058'),
    ('31', '4', '2', '0.4011', '0.8025+0.5967i', '-0.6855+0.7281i', '0.2171-0.9761i', '0.3844'),
    ('37', '-11', '1', '0.9001', '-0.2907+0.9568i', '-0.9939-0.1106i', '0.8980-0.4399i', '0.6830'),
    ('43', '-8', '2', '0.7423', '0.1847+0.9828i', '-0.9804+0.1971i', '0.7022-0.7120i', '0.5126'),
    ('61', '1', '3', '0.5022', '0.6436+0.7653i', '-0.8671+0.4982i', '0.3730-0.9278i', '0.3232'),
    ('67', '-5', '3', '0.6271', '0.4178+0.9085i', '-0.9589+0.2837i', '0.5632-0.8263i', '0.3571'),
    ('73', '7', '3', '0.3829', '0.7932+0.6089i', '-0.7822+0.6231i', '0.1987-0.9801i', '0.2661'),
    ('79', '-17', '1', '0.9483', '-0.4295+0.9031i', '-0.8761-0.4821i', '0.9657-0.2596i', '0.4408'),
    ('97', '19', '1', '0.0890', '0.9887+0.1498i', '-0.4791+0.8778i', '-0.2383-0.9712i', '0.2383'),
    ('103', '13', '3', '0.2919', '0.8757+0.4828i', '-0.7239+0.6899i', '0.0609-0.9981i', '0.2327'),
    ('109', '-2', '4', '0.5556', '0.5288+0.8487i', '-0.9508+0.3097i', '0.4751-0.8799i', '0.2600'),
    ('127', '-20', '2', '0.8875', '-0.2473+0.9689i', '-0.9083-0.4183i', '0.9253-0.3794i', '0.3193'),
    ('139', '-23', '1', '0.9731', '-0.4663+0.8846i', '-0.7821-0.6231i', '0.9836-0.1804i', '0.3135'),
    ('151', '19', '3', '0.2290', '0.9203+0.3913i', '-0.6848+0.7287i', '-0.0415-0.9991i', '0.1997'),
    ('157', '-14', '4', '0.7212', '0.1708+0.9853i', '-0.9969-0.0789i', '0.7371-0.6757i', '0.2520'),
    ('163', '25', '1', '0.0683', '0.9929+0.1190i', '-0.4865+0.8737i', '-0.2912-0.9567i', '0.1941'),
    ('181', '7', '5', '0.4359', '0.7010+0.7132i', '-0.9002+0.4355i', '0.2959-0.9552i', '0.1824'),
]

TABLE_3 = [
    ('7', '1', '1', '0.4602', '-1.2221', '9.4127', '2.7389', '-0.4619', '3.5577', '1.0352'),
    ('13', '-5', '1', '0.7790', '-1.4201', '-14.6415', '2.1601', '-0.3939', '-4.0608', '0.5991'),
    ('19', '7', '1', '0.2129', '-2.2521', '8.4655', '4.8488', '-0.5167', '1.9421', '1.112'),
    ('31', '4', '2', '0.4011', '-2.8168', '17.2938', '4.6888', '-0.5059', '3.1061', '0.8421'),
    ('37', '-11', '1', '0.9001', '-3.0328', '-7.1015', '2.8445', '-0.4986', '-1.1675', '0.4676'),
    ('43', '-8', '2', '0.7423', '-3.2558', '-20.3776', '3.6527', '-0.4965', '-3.1075', '0.557'),
    ('61', '1', '3', '0.5022', '-4.0014', '50.9574', '5.4586', '-0.5123', '6.5244', '0.6989'),
    ('67', '-5', '3', '0.6271', '-4.2289', '-95.9688', '5.0005', '-0.5166', '-11.7245', '0.6109'),
    ('73', '7', '3', '0.3829', '-4.4100', '25.6091', '6.6407', '-0.5162', '2.9973', '0.7772'),
    ('79', '-17', '1', '0.9483', '-5.6126', '-8.9422', '4.1623', '-0.6315', '-1.0061', '0.4683'),
    ('97', '19', '1', '0.0890', '-5.0982', '13.5365', '10.4124', '-0.5176', '1.3744', '1.0572'),
    ('103', '13', '3', '0.2919', '-5.2556', '21.9500', '8.4142', '-0.5179', '2.1628', '0.8291'),
    ('109', '-2', '4', '0.5556', '-5.5068', '337.8101', '6.6180', '-0.5275', '32.3563', '0.6339'),
    ('127', '-20', '2', '0.8875', '-7.1148', '-14.4873', '5.5161', '-0.6313', '-1.2855', '0.4895'),
    ('139', '-23', '1', '0.9731', '-8.4417', '-11.5986', '5.6060', '-0.7160', '-0.9838', '0.4755'),
    ('151', '19', '3', '0.2209', '-6.3543', '22.1314', '10.5843', '-0.5171', '1.8010', '0.8613'),
    ('157', '-14', '4', '0.7212', '-7.1235', '-36.5459', '6.8056', '-0.5685', '-2.9167', '0.5431'),
    ('163', '25', '1', '0.0683', '-6.5753', '16.4057', '13.3294', '-0.5150', '1.2850', '1.0440'),
    ('181', '7', '5', '0.4359', '-7.0841', '58.2887', '9.2448', '-0.5266', '4.3326', '0.6872'),
]

TABLE_4 = [
    ('1003273', '973', '337', '0.354542', '-2.43320', '-2.43251', '0.70803', '0.709084', '0.002810'),
    ('1003279', '1993', '39', '0.033775', '-3.07411', '-3.07404', '0.06742', '0.067555', '0.002995'),
    ('100205473', '9733', '3367', '0.354372', '-2.43292', '-2.43285', '0.70864', '0.708744', '0.000281'),
]

TABLE_5 = [
    ('67521601729', '-2', '100016', '0.523600', '-0.577349', '779550.5', '0.577353'),
    ('67544557351', '1', '100033', '0.523598', '-0.577347', '194920.0', '0.577353'),
    ('250004500027', '1000009', '1', '0.000002', '-0.500000', '1.000007', '1.000001'),
    ('250018500349', '-1000037', '1', '1.047196', '-0.999995', '-0.999997', '0.500000'),
]

