#!/usr/bin/env python3
"""Regenerates the CSV fixtures under fixtures/.

The hand-written emails are fixed; the template corpus is expanded with a
seeded RNG so reruns produce identical files.
"""
import csv
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parents[2] / "fixtures"

SUBJECT_BODY = [
    # (subject, body, label)
    ("Meeting moved to Thursday", "Hi team, the weekly sync is moved to Thursday at 10am in room 4B. Agenda attached.", 0),
    ("Re: Q3 budget draft", "Thanks Karen, I added the travel line items. Can you check the totals before Friday?", 0),
    ("Lunch tomorrow?", "Are you free for lunch tomorrow around noon? The new noodle place opened downstairs.", 0),
    ("Code review for parser change", "I pushed the tokenizer fix to the branch. Could you review the unit tests when you get a chance?", 0),
    ("Conference call notes", "Attached are the notes from the call with the vendor. Action items are listed at the bottom.", 0),
    ("Updated org chart", "HR published the updated org chart for the trading desk. Let me know if anything looks off.", 0),
    ("Re: pipeline capacity report", "The gas pipeline capacity numbers for November are in the shared folder under reports.", 0),
    ("Holiday schedule", "Reminder that the office is closed on Monday. Please submit timesheets by end of day Friday.", 0),
    ("Draft contract comments", "Legal returned comments on the draft contract. Most are minor wording changes on section 3.", 0),
    ("Server maintenance window", "The database servers will be patched Saturday night between 11pm and 2am.", 0),
    ("Re: dinner plans", "Saturday works for us. We can bring dessert, just tell me what time to arrive.", 0),
    ("Quarterly review slides", "Please send me your slides for the quarterly review by Wednesday so I can merge the deck.", 0),
    ("Training session signup", "The spreadsheet for the risk management training session is open. Sign up for a slot.", 0),
    ("Re: visa paperwork", "I scanned the forms you requested and left the originals with the front desk.", 0),
    ("Project kickoff", "Kickoff for the billing migration project is next Tuesday. Invite and agenda to follow.", 0),
    ("You have WON a cash prize", "Congratulations! Your email was selected in our international lottery. Claim your $1,000,000 prize now by replying with your bank details.", 1),
    ("Cheap meds online", "Buy cheap pills online without prescription. Viagra, cialis and more at 80% discount. Order now!", 1),
    ("Urgent: verify your account", "Your account has been suspended due to unusual activity. Click here to verify your password immediately or lose access.", 1),
    ("Work from home opportunity", "Earn $5000 per week working from home! No experience needed. Send your details today to secure your position.", 1),
    ("Business proposal", "I am a prince seeking a trusted partner to transfer $25 million. You will receive 30% for your assistance. Reply urgently.", 1),
    ("Limited time offer!!!", "Act now! Limited time offer on replica watches. Free shipping worldwide. Don't miss out!", 1),
    ("Your invoice is overdue", "Final notice: your invoice is overdue. Download the attached file and enter your credit card to avoid penalties.", 1),
    ("Lose weight fast", "Miracle diet pills burn fat overnight. Guaranteed results or your money back. Click to order.", 1),
    ("Security alert from your bank", "We detected a login from an unknown device. Confirm your identity by entering your account number and PIN at the link below.", 1),
    ("Make money with crypto", "Double your bitcoin in 24 hours with our secret trading bot. Deposit now, limited spots available!", 1),
    ("Exclusive deal for you", "Winner! You have been chosen to receive a free iPhone. Just pay shipping, enter your card details now.", 1),
    ("Re: your package", "Your package could not be delivered. Pay the customs fee of $2.99 at our secure portal to release it.", 1),
    ("Hot singles near you", "Meet hot singles in your area tonight. Free registration, click here now!", 1),
    ("Refinance now", "Lowest mortgage rates ever! Refinance today and save thousands. Approval guaranteed, no credit check.", 1),
    ("Claim your refund", "You are eligible for a tax refund of $820. Submit your social security number and bank account to claim it.", 1),
]

FULL_HEADER = [
    # (sender, receiver, date, subject, body, label, urls)
    ("alice@research.example.org", "bob@research.example.org", "Tue, 05 Aug 2008 16:31:02 -0700", "Seminar reminder", "The machine learning seminar is tomorrow at 3pm in the main auditorium.", 0, 0),
    ("dev-list@lists.example.org", "bob@research.example.org", "Wed, 06 Aug 2008 09:12:44 +0000", "[dev] Build failure on trunk", "The nightly build failed on the linux target. The error is in the linker step, log attached.", 0, 1),
    ("carol@company.example.com", "team@company.example.com", "Thu, 07 Aug 2008 11:05:10 +0100", "Minutes from planning", "Minutes from today's planning meeting are attached. Next review is scheduled for the 21st.", 0, 0),
    ("dave@university.example.edu", "grad-students@university.example.edu", "Fri, 08 Aug 2008 14:45:00 -0400", "Thesis defense schedule", "Defense slots for September are posted on the department page. Please pick a time with your advisor.", 0, 1),
    ("erin@company.example.com", "frank@company.example.com", "Mon, 11 Aug 2008 08:20:33 +0000", "Re: expense report", "Approved your expense report. Finance will reimburse in the next payroll cycle.", 0, 0),
    ("newsletter@opensource.example.org", "bob@research.example.org", "Tue, 12 Aug 2008 07:00:00 +0000", "Monthly release notes", "Version 2.4 is out with bug fixes for the scheduler and improved documentation.", 0, 1),
    ("gina@company.example.com", "hank@company.example.com", "Wed, 13 Aug 2008 17:55:21 +0000", "Re: offsite logistics", "The bus leaves at 8am from the north parking lot. Bring a laptop for the workshop.", 0, 0),
    ("ivan@research.example.org", "alice@research.example.org", "Thu, 14 Aug 2008 10:10:10 +0200", "Dataset question", "Is the labeled dataset from last quarter on the cluster or should I copy it from backup?", 0, 0),
    ("support@hosting.example.net", "admin@company.example.com", "Fri, 15 Aug 2008 03:00:00 +0000", "Scheduled maintenance notice", "Your hosting plan's servers will undergo scheduled maintenance this weekend. No action is required.", 0, 1),
    ("jane@university.example.edu", "dave@university.example.edu", "Mon, 18 Aug 2008 12:34:56 -0400", "Paper draft", "I finished the related work section. Can you read it before our meeting on Wednesday?", 0, 0),
    ("kim@company.example.com", "it-help@company.example.com", "Tue, 19 Aug 2008 09:48:00 +0000", "Printer on floor 3", "The printer on floor 3 is jammed again. Could someone from IT take a look?", 0, 0),
    ("leo@research.example.org", "team@research.example.org", "Wed, 20 Aug 2008 15:15:15 +0000", "Group photo", "Photos from the retreat are uploaded to the shared drive in the events folder.", 0, 1),
    ("mia@company.example.com", "erin@company.example.com", "Thu, 21 Aug 2008 16:40:00 +0000", "Re: customer escalation", "I called the customer and scheduled a follow up for Monday. Notes are in the ticket.", 0, 0),
    ("nick@opensource.example.org", "dev-list@lists.example.org", "Fri, 22 Aug 2008 19:01:12 +0000", "Patch: fix memory leak", "This patch frees the buffer in the error path of the decoder. Tests pass locally.", 0, 1),
    ("olga@university.example.edu", "jane@university.example.edu", "Mon, 25 Aug 2008 08:08:08 -0400", "Office hours", "Office hours this week move to Thursday afternoon because of the faculty meeting.", 0, 0),
    ("winner@lotto-intl.example.biz", "bob@research.example.org", "Tue, 05 Aug 2008 02:11:09 +0000", "CONGRATULATIONS WINNER", "Your email address won 850,000 GBP in the online lottery. Send your full name, address and bank account to claim.", 1, 1),
    ("pharmacy@cheap-rx.example.ru", "alice@research.example.org", "Wed, 06 Aug 2008 04:44:44 +0000", "Save 70% on meds", "Cheap generic viagra and cialis, no prescription needed. Discreet shipping. Order today!", 1, 1),
    ("security@paypa1-alerts.example.com", "erin@company.example.com", "Thu, 07 Aug 2008 05:05:05 +0000", "Account limited", "We limited your account access. Verify your identity now by logging in and confirming your card number.", 1, 1),
    ("mr.james.obi@mail.example.ng", "frank@company.example.com", "Fri, 08 Aug 2008 06:06:06 +0000", "Strictly confidential", "I am the bank manager. A deceased client left $18.5 million with no next of kin. Send your details urgently to receive your share.", 1, 0),
    ("hr@global-jobs.example.info", "jane@university.example.edu", "Mon, 11 Aug 2008 07:07:07 +0000", "Job offer: remote assistant", "Earn a weekly salary as a remote assistant. Email your resume and a copy of your ID to apply now.", 1, 0),
    ("deals@replica.example.cn", "kim@company.example.com", "Tue, 12 Aug 2008 08:08:08 +0000", "Luxury watches 90% off", "Rolex replica watches at unbeatable prices. Limited stock, don't miss out!", 1, 1),
    ("billing@invoice-center.example.net", "admin@company.example.com", "Wed, 13 Aug 2008 09:09:09 +0000", "Outstanding payment", "Your payment is overdue. Open the attached invoice and enter your credit card details to avoid suspension.", 1, 1),
    ("noreply@crypto-bot.example.io", "leo@research.example.org", "Thu, 14 Aug 2008 10:10:10 +0000", "Guaranteed profit", "Our trading robot doubles your investment every day. Deposit bitcoin now and withdraw anytime!", 1, 1),
    ("prize@rewards.example.biz", "mia@company.example.com", "Fri, 15 Aug 2008 11:11:11 +0000", "You have been selected", "Claim your free gift card worth $500. Complete the survey and enter your card details for verification.", 1, 1),
    ("delivery@parcel-track.example.top", "nick@opensource.example.org", "Mon, 18 Aug 2008 12:12:12 +0000", "Delivery failed", "We could not deliver your parcel. Pay a small redelivery fee at the link to reschedule.", 1, 1),
    ("admin@mailbox-upgrade.example.com", "olga@university.example.edu", "Tue, 19 Aug 2008 13:13:13 +0000", "Mailbox quota exceeded", "Your mailbox is full. Click the link and enter your username and password to upgrade your quota now.", 1, 1),
    ("loans@fastcash.example.biz", "ivan@research.example.org", "Wed, 20 Aug 2008 14:14:14 +0000", "Instant loan approval", "Get up to $10,000 today with no credit check. Approval guaranteed, apply now!", 1, 1),
    ("diet@slim-fast.example.ru", "gina@company.example.com", "Thu, 21 Aug 2008 15:15:15 +0000", "Lose 20 pounds in 2 weeks", "Miracle pills melt fat with no exercise. Order now and get a free bottle!", 1, 1),
    ("irs-refund@tax-gov.example.co", "hank@company.example.com", "Fri, 22 Aug 2008 16:16:16 +0000", "Tax refund notification", "You are eligible for a refund. Submit your social security number and bank details within 24 hours.", 1, 1),
    ("dating@meet-now.example.xyz", "dave@university.example.edu", "Mon, 25 Aug 2008 17:17:17 +0000", "Someone likes you", "A beautiful woman near you wants to chat tonight. Click here to see her private photos now!", 1, 1),
]

MDF2_SMALL = [
    ("Jane Roe <jane@example.org>", "ops@example.org", "Mon, 04 Aug 2008 09:00:00 +0000", "Status, week 32", "All jobs green.\nTwo tickets closed, one \"blocked\" on vendor.", 0, 0),
    ("spammer@example.biz", "victim@example.org", "Mon, 04 Aug 2008 09:30:00 +0000", "", "FREE money!!! Reply now, \"limited\" offer", 1, 1),
    ("bob@example.org", "", "", "Re: lunch", "Sure, 12:30 works.", 0, 0),
    ("prize@example.top", "victim@example.org", "Tue, 05 Aug 2008 01:02:03 +0000", "You won", "Line one\r\nLine two, with comma", 1, 1),
    ("", "team@example.org", "Tue, 05 Aug 2008 10:00:00 +0000", "No sender", "Body with trailing spaces   ", 0, 0),
    ("unicode@example.org", "team@example.org", "Wed, 06 Aug 2008 11:11:11 +0000", "Café ☕ menu", "Crème brûlée for dessert — 5€", 0, 1),
]

# Template corpus. Phrases are generic phishing/ham vocabulary; none of the
# sentences reproduce a specific evaluation email.
SPAM_OPENERS = ["Dear Candidate,", "Dear Customer,", "Hello friend,", "Dear Winner,", "Attention:", "Dear Sir/Madam,"]
SPAM_HOOKS = [
    "We have an exciting home-based role with attractive weekly pay.",
    "You have been selected for a remote assistant position with flexible hours.",
    "Your account requires immediate verification to avoid suspension.",
    "You are the lucky winner of our international cash promotion.",
    "A busy executive is looking for a personal secretary right away.",
    "Our company is hiring part-time agents to process payments from home.",
    "We noticed unusual sign-in activity and temporarily limited your access.",
    "You qualify for an exclusive reward, but only for a limited time.",
]
SPAM_ASKS = [
    "Email your resume, contact number and a passport copy for our records.",
    "Complete the attached application form, sign it and return a scanned copy.",
    "Reply with your full name, home address and bank account details.",
    "Confirm your password and credit card number using the secure link.",
    "Provide a copy of your ID and your social security number to proceed.",
    "Complete the form and return it with a photo of your driver license.",
    "Upload a scanned copy of your passport and mobile number today.",
]
SPAM_URGENCY = [
    "Do not let this opportunity pass you by!",
    "Act now, this offer expires in 24 hours!",
    "Respond immediately to secure your position.",
    "Failure to respond will result in account closure.",
    "Only a few spots remain, apply today!",
    "This is a once in a lifetime opportunity, do not miss it!",
]
SPAM_SIGNOFFS = ["Sincerely, Recruitment Team", "Regards, Verification Department", "Best wishes, Hiring Manager",
                 "Customer Security Team", "Claims Office", "Kind regards, HR Department"]
SPAM_SUBJECTS = ["Personal assistant job offer", "Urgent account verification", "Remote position available",
                 "Claim your reward now", "Job opportunity: apply today", "Action required on your account",
                 "Assistant needed immediately", "Congratulations, you are selected"]

HAM_OPENERS = ["Hi team,", "Hello all,", "Hi Sam,", "Good morning,", "Hey,", "Dear colleagues,"]
HAM_BODIES = [
    "The project review meeting is moved to Thursday afternoon in the usual conference room.",
    "Attached are the minutes from yesterday's planning session with the action items.",
    "The quarterly report draft is ready for comments in the shared folder.",
    "Please remember to submit your timesheets before the end of the month.",
    "The lab seminar this week covers graph algorithms and will start at 3pm.",
    "I merged the fix for the build script; the nightly tests are green again.",
    "Our research group lunch is on Friday, the department will cover the cost.",
    "The budget spreadsheet now includes travel for the spring conference.",
    "Course registration for the fall semester opens on Monday morning.",
    "The server upgrade finished without issues and all services are back online.",
]
HAM_FOLLOWUPS = [
    "Let me know if you have questions.",
    "Comments are welcome before the next meeting.",
    "I will send the agenda tomorrow.",
    "Thanks for your help with this.",
    "See you there.",
    "Feel free to forward this to anyone who missed it.",
]
HAM_SIGNOFFS = ["Thanks, Priya", "Best, Tom", "Cheers, Alex", "Regards, Maria", "Thanks, the Lab Office", "Best regards, Chen"]
HAM_SUBJECTS = ["Meeting update", "Minutes from planning", "Report draft for review", "Timesheet reminder",
                "Seminar this week", "Build fixed", "Group lunch Friday", "Budget update", "Registration opens",
                "Upgrade complete"]
HAM_SENDERS = ["priya@university.example.edu", "tom@company.example.com", "alex@lab.example.org",
               "maria@university.example.edu", "office@lab.example.edu", "chen@company.example.com"]
SPAM_SENDERS = ["jobs@careers-online.example.biz", "verify@secure-account.example.top", "hr@remote-hiring.example.info",
                "rewards@promo-center.example.xyz", "assistant.hiring@mail.example.com", "prof.office@gmail.example.com"]


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def synthetic_rows(n_spam, n_ham, seed=42):
    rng = random.Random(seed)
    rows = []
    for _ in range(n_spam):
        body = " ".join([rng.choice(SPAM_OPENERS), rng.choice(SPAM_HOOKS), rng.choice(SPAM_ASKS),
                         rng.choice(SPAM_URGENCY), rng.choice(SPAM_SIGNOFFS)])
        rows.append((rng.choice(SPAM_SENDERS), "", "", rng.choice(SPAM_SUBJECTS), body, 1, rng.randint(0, 1)))
    for _ in range(n_ham):
        body = " ".join([rng.choice(HAM_OPENERS), rng.choice(HAM_BODIES), rng.choice(HAM_BODIES),
                         rng.choice(HAM_FOLLOWUPS), rng.choice(HAM_SIGNOFFS)])
        rows.append((rng.choice(HAM_SENDERS), "", "", rng.choice(HAM_SUBJECTS), body, 0, 0))
    rng.shuffle(rows)
    return rows


def main():
    ROOT.mkdir(exist_ok=True)
    full = ["sender", "receiver", "date", "subject", "body", "label", "urls"]
    write_csv(ROOT / "enron_small.csv", ["subject", "body", "label"], SUBJECT_BODY)
    write_csv(ROOT / "ceas_small.csv", full, FULL_HEADER)
    write_csv(ROOT / "mdf2_small.csv", full, MDF2_SMALL)
    write_csv(ROOT / "synthetic_templates.csv", full, synthetic_rows(120, 120))
    (ROOT / "manifest.txt").write_text(
        "# 60-email fixture corpus\nenron_small.csv,subject_body\nceas_small.csv,full_header\n")
    (ROOT / "manifest_extended.txt").write_text(
        "# fixture corpus plus 240 synthetic template emails\n"
        "enron_small.csv,subject_body\nceas_small.csv,full_header\nsynthetic_templates.csv,full_header\n")


if __name__ == "__main__":
    main()
